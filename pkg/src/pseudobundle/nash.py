"""Limits of kernel planes along rational curves, in Plücker coordinates.

Along a curve c(t) the matrix A(c(t)) has a kernel over Q(t) of some
dimension k.  As t -> 0 that k-plane converges in the Grassmannian; the
limit is read off from the lowest-order terms of the Plücker coordinates
of a polynomial kernel basis.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import (
    PolyMatrix,
    RationalMatrix,
    Vector,
    kernel_basis,
    mat_vec,
    rref,
    univariate_kernel_basis,
)
from .poly import Polynomial, VariableContext
from .strata import MorphismInstance

CURVE_CONTEXT = VariableContext(("t",))


class KernelDimensionError(ValueError):
    pass


@dataclass(frozen=True)
class RationalCurve:
    """Polynomial arc t -> (c_1(t), ..., c_n(t)); its base point is c(0)."""

    components: tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise ValueError("a curve needs at least one component")
        if any(c.ctx != CURVE_CONTEXT for c in comps):
            raise ValueError("curve components must be polynomials in t")
        if all(c.is_constant() for c in comps):
            raise ValueError("curve is constant in every coordinate")

    @classmethod
    def parse(cls, text: str) -> RationalCurve:
        return cls(tuple(CURVE_CONTEXT.parse(chunk) for chunk in text.split(",")))

    @property
    def base_point(self) -> tuple[Fraction, ...]:
        return tuple(c.constant_term() for c in self.components)

    def __str__(self) -> str:
        return ", ".join(str(c) for c in self.components)


@dataclass(frozen=True)
class PluckerVector:
    """Coordinates of a k-plane in Q^n, indexed by k-subsets in lexicographic order.

    Normalized so the first nonzero coordinate is 1.
    """

    k: int
    n: int
    coords: tuple[Fraction, ...]

    @property
    def subsets(self) -> list[tuple[int, ...]]:
        return list(itertools.combinations(range(self.n), self.k))

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return dict(zip(self.subsets, self.coords))

    @classmethod
    def normalized(cls, k: int, n: int, coords: Sequence[Fraction]) -> PluckerVector:
        lead = next((c for c in coords if c), None)
        if lead is None:
            raise ValueError("all Plücker coordinates vanish")
        return cls(k, n, tuple(Fraction(c) / lead for c in coords))


@dataclass(frozen=True)
class LimitPlane:
    plucker: PluckerVector
    basis: tuple[Vector, ...]
    base_point: tuple[Fraction, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)


def _det(M: RationalMatrix) -> Fraction:
    a = [list(r) for r in M]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def plucker_from_basis(basis: Sequence[Sequence[Fraction]], n: int) -> PluckerVector:
    k = len(basis)
    coords = [
        _det([[row[j] for j in S] for row in basis])
        for S in itertools.combinations(range(n), k)
    ]
    return PluckerVector.normalized(k, n, coords)


def kernel_plucker(M: Sequence[Sequence[Fraction]], expect_k: int) -> PluckerVector:
    basis = kernel_basis(M)
    if len(basis) != expect_k:
        raise KernelDimensionError(f"kernel dimension {len(basis)} != {expect_k}")
    if expect_k == 0:
        raise KernelDimensionError("the zero plane has no Plücker coordinates")
    return plucker_from_basis(basis, len(M[0]))


def _valuation(p: Polynomial) -> int | None:
    if p.is_zero():
        return None
    return min(e[0] for e in p.coeffs)


def _coeff(p: Polynomial, v: int) -> Fraction:
    return p.coeffs.get((v,), Fraction(0))


def limit_kernel_along_curve(inst: MorphismInstance, curve: RationalCurve) -> LimitPlane:
    """Limit as t -> 0 of ker A(c(t)), with its normalized Plücker vector."""
    if len(curve.components) != inst.ctx.arity:
        raise ValueError(
            f"curve has {len(curve.components)} components, instance has {inst.ctx.arity} variables"
        )
    p0 = inst.check_point(curve.base_point)
    At = inst.matrix.substitute(curve.components)
    K = univariate_kernel_basis(At)
    k, n = len(K), inst.n
    if k == 0:
        raise KernelDimensionError("kernel is zero along the curve; there is nothing to limit")
    B = PolyMatrix(CURVE_CONTEXT, tuple(K))
    rows = tuple(range(k))
    subsets = list(itertools.combinations(range(n), k))
    minors = [B.minor(rows, S) for S in subsets]
    vals = [_valuation(p) for p in minors]
    v = min(x for x in vals if x is not None)
    pivot = subsets[vals.index(v)]
    lead = _coeff(minors[vals.index(v)], v)

    basis = []
    for i in range(k):
        row = []
        for j in range(n):
            cols = pivot[:i] + (j,) + pivot[i + 1 :]
            if len(set(cols)) < k:
                row.append(Fraction(0))
                continue
            row.append(_coeff(B.minor(rows, cols), v) / lead)
        basis.append(row)
    echelon, _ = rref(basis)
    plucker = PluckerVector.normalized(k, n, [_coeff(p, v) for p in minors])
    if plucker_from_basis(echelon, n) != plucker:
        raise ArithmeticError("limit basis disagrees with limit Plücker coordinates")
    return LimitPlane(plucker, tuple(tuple(r) for r in echelon), tuple(p0))


def limit_plane_in_kernel_check(inst: MorphismInstance, limit: LimitPlane) -> bool:
    """True iff every basis vector of the limit plane is killed by A at the base point."""
    Ap = inst.matrix.evaluate(limit.base_point)
    return all(not any(mat_vec(Ap, b)) for b in limit.basis)
