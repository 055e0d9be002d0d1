"""Seeded random polynomials and instances for property checks and sweeps."""

from __future__ import annotations

import itertools
import random

from .groebner import Ideal
from .linalg import PolyMatrix
from .poly import Polynomial, VariableContext
from .strata import MorphismInstance


def random_polynomial(
    rng: random.Random,
    ctx: VariableContext,
    max_degree: int = 2,
    coeff_range: int = 3,
    density: float = 0.5,
) -> Polynomial:
    """Each monomial of degree <= max_degree gets a coefficient in [-c, c] with probability ``density``."""
    coeffs = {}
    for e in itertools.product(range(max_degree + 1), repeat=ctx.arity):
        if sum(e) <= max_degree and rng.random() < density:
            coeffs[e] = rng.randint(-coeff_range, coeff_range)
    return Polynomial(ctx, coeffs)


def random_matrix(
    rng: random.Random,
    ctx: VariableContext,
    m: int,
    n: int,
    max_degree: int = 2,
    coeff_range: int = 3,
    density: float = 0.5,
    zero_entry_rate: float = 0.25,
) -> PolyMatrix:
    rows = []
    for _ in range(m):
        row = []
        for _ in range(n):
            if rng.random() < zero_entry_rate:
                row.append(ctx.zero())
            else:
                row.append(random_polynomial(rng, ctx, max_degree, coeff_range, density))
        rows.append(tuple(row))
    return PolyMatrix(ctx, tuple(rows))


def random_instance(
    rng: random.Random,
    m: int,
    n: int,
    variables: tuple[str, ...] = ("x", "y"),
    **kwargs,
) -> MorphismInstance:
    ctx = VariableContext(variables)
    return MorphismInstance(ctx, Ideal(ctx), random_matrix(rng, ctx, m, n, **kwargs))
