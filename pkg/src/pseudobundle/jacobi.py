"""Betti-number bookkeeping for the Abel-Jacobi map Sp^d(M) -> J(M).

Poincaré polynomials of symmetric products come from Macdonald's generating
function

    sum_d P(Sp^d M; t) x^d = (1 + x t)^(2g) / ((1 - x)(1 - x t^2)),

which is compared against the product torus x CP^(d-g) predicted by a fibre
bundle with projective-space fibres.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

MAX_GENUS = 8
MAX_DEGREE = 32


class NotSurjectiveError(ValueError):
    """d < g: the Abel-Jacobi map is not surjective."""


@dataclass(frozen=True)
class PoincarePolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        c = list(self.coeffs)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def betti(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __mul__(self, other: PoincarePolynomial) -> PoincarePolynomial:
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PoincarePolynomial(tuple(out))

    def __call__(self, t: int) -> int:
        return sum(b * t**j for j, b in enumerate(self.coeffs))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __str__(self) -> str:
        parts = []
        for j, b in enumerate(self.coeffs):
            if not b:
                continue
            mono = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            if not mono:
                parts.append(str(b))
            else:
                parts.append(mono if b == 1 else f"{b}*{mono}")
        return " + ".join(parts) or "0"


def _guard(g: int, d: int) -> None:
    if g < 0 or d < 0:
        raise ValueError("genus and degree must be nonnegative")
    if g > MAX_GENUS or d > MAX_DEGREE:
        raise ValueError(f"g <= {MAX_GENUS} and d <= {MAX_DEGREE} required")


def sp_poincare(g: int, d: int) -> PoincarePolynomial:
    """Poincaré polynomial of the d-th symmetric product of a genus-g surface."""
    _guard(g, d)
    b = [0] * (2 * d + 1)
    for a in range(min(2 * g, d) + 1):
        for c in range(d - a + 1):
            b[a + 2 * c] += comb(2 * g, a)
    return PoincarePolynomial(tuple(b))


def torus_poincare(g: int) -> PoincarePolynomial:
    _guard(g, 0)
    return PoincarePolynomial(tuple(comb(2 * g, j) for j in range(2 * g + 1)))


def cp_poincare(N: int) -> PoincarePolynomial:
    if N < 0:
        raise ValueError("N must be nonnegative")
    return PoincarePolynomial(tuple(1 - j % 2 for j in range(2 * N + 1)))


def product_poincare(g: int, d: int) -> PoincarePolynomial:
    """Poincaré polynomial of J(M) x CP^(d-g)."""
    if d < g:
        raise NotSurjectiveError(f"d = {d} < g = {g}")
    return torus_poincare(g) * cp_poincare(d - g)


def mattuck_product_check(g: int, d: int) -> bool:
    if d < 2 * g - 1:
        raise ValueError(f"the fibre bundle range needs d >= 2g - 1, got g={g}, d={d}")
    return sp_poincare(g, d) == product_poincare(g, d)


@dataclass(frozen=True)
class RangeReport:
    g: int
    d: int
    agree_through: int
    first_divergence: int | None
    sp: PoincarePolynomial
    product: PoincarePolynomial

    def rows(self) -> list[tuple[int, int, int]]:
        top = max(self.sp.degree, self.product.degree)
        return [(j, self.sp.betti(j), self.product.betti(j)) for j in range(top + 1)]


def compare_with_product(g: int, d: int) -> RangeReport:
    sp, prod = sp_poincare(g, d), product_poincare(g, d)
    top = max(sp.degree, prod.degree)
    first = next((j for j in range(top + 1) if sp.betti(j) != prod.betti(j)), None)
    agree = top if first is None else first - 1
    return RangeReport(g, d, agree, first, sp, prod)


def quasifib_range_check(g: int, d: int) -> RangeReport:
    """Degrees in which Sp^d(M) and J(M) x CP^(d-g) have equal Betti numbers, g <= d <= 2g-2."""
    if not g <= d <= 2 * g - 2:
        raise ValueError(f"needs g <= d <= 2g - 2, got g={g}, d={d}")
    return compare_with_product(g, d)


@dataclass(frozen=True)
class BoundsReport:
    """Connectivity bounds; ``None`` marks an entry that does not apply."""

    g: int
    d: int
    k: int | None
    abel_jacobi_qf_dim: int | None
    hol_qf_dim: int | None
    inclusion_equiv_dim: int | None
    pseudo_bundle_generic_rank: int | None
    fibre_bundle_fibre_dim: int | None

    @property
    def in_quasifibration_range(self) -> bool:
        return self.g <= self.d <= 2 * self.g - 2


def bounds_report(g: int, d: int, k: int | None = None) -> BoundsReport:
    _guard(g, d)
    if d < g:
        raise NotSurjectiveError(f"d = {d} < g = {g}: the Abel-Jacobi map cannot be surjective")
    if k is not None and k < 1:
        raise ValueError("map degree k must be >= 1")
    in_range = d <= 2 * g - 2
    e = d - g
    if in_range:
        inclusion = 2 * e - 1 if k is not None else None
    else:
        inclusion = (2 * e - 1) * k if k is not None else None
    return BoundsReport(
        g=g,
        d=d,
        k=k,
        abel_jacobi_qf_dim=2 * e + 1 if in_range else None,
        hol_qf_dim=2 * e - 1 if in_range and k is not None else None,
        inclusion_equiv_dim=inclusion,
        pseudo_bundle_generic_rank=e + 1 if in_range else None,
        fibre_bundle_fibre_dim=e if d >= 2 * g - 1 else None,
    )
