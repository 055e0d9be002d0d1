"""Rank stratification of a polynomial matrix over an affine variety.

A :class:`MorphismInstance` is an m×n polynomial matrix ``A`` (the fiberwise
map from an n-dimensional source to an m-dimensional target) over
X = V(J).  The kernel dimension at a point is ``n - rank A(x)``; the locus
where it is at least ``i`` is cut out by J together with the
``(n - i + 1)``-minors of ``A``.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .groebner import (
    DEFAULT_BUDGET,
    GroebnerStats,
    Ideal,
    is_unit_ideal,
    radical_membership,
    same_variety,
)
from .linalg import PolyMatrix, bareiss_rank, minors_of_size
from .poly import ContextMismatchError, Polynomial, Scalar, VariableContext


class EmptyVarietyError(ValueError):
    """The ambient ideal is the unit ideal, so X is empty."""


class PointNotOnVarietyError(ValueError):
    def __init__(self, point: Sequence[Fraction], generator: Polynomial, value: Fraction):
        self.point = tuple(point)
        self.generator = generator
        self.value = value
        pt = ", ".join(str(v) for v in point)
        super().__init__(f"point ({pt}) is not on X: generator {generator} evaluates to {value}")


@dataclass(frozen=True)
class MorphismInstance:
    ctx: VariableContext
    ambient: Ideal
    matrix: PolyMatrix

    def __post_init__(self) -> None:
        if self.ambient.ctx != self.ctx or self.matrix.ctx != self.ctx:
            raise ContextMismatchError("ambient ideal and matrix must share the instance context")

    @classmethod
    def from_texts(
        cls,
        variables: Sequence[str],
        matrix: Sequence[Sequence[str]],
        ambient: Sequence[str] = (),
        order: str = "grevlex",
    ) -> MorphismInstance:
        ctx = VariableContext(tuple(variables), order)
        return cls(ctx, Ideal(ctx, ambient), PolyMatrix.from_texts(ctx, matrix))

    @property
    def m(self) -> int:
        return self.matrix.shape[0]

    @property
    def n(self) -> int:
        return self.matrix.shape[1]

    def with_order(self, order: str) -> MorphismInstance:
        ctx = self.ctx.with_order(order)
        if ctx == self.ctx:
            return self
        return MorphismInstance(ctx, Ideal(ctx, self.ambient.generators), self.matrix.reorder(ctx))

    def check_point(self, point: Sequence[Scalar]) -> list[Fraction]:
        if len(point) != self.ctx.arity:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.ctx.arity}")
        pt = [Fraction(v) for v in point]
        for g in self.ambient.generators:
            val = g.evaluate(pt)
            if val:
                raise PointNotOnVarietyError(pt, g, val)
        return pt


@dataclass
class Stratum:
    kernel_dim: int
    ideal: Ideal
    is_empty: bool
    empty_difference: bool = False


@dataclass(frozen=True)
class GenericRank:
    value: int
    certified: bool


@dataclass
class Stratification:
    """Strata X_i for kernel dimensions i = k_min, ..., n + 1.

    The last entry is always the empty stratum that terminates the chain.
    """

    strata: list[Stratum]
    k_min: int
    k_max: int
    generic_rank: GenericRank
    quasifib_dim: int
    order: str
    stats: GroebnerStats = field(default_factory=GroebnerStats)

    @property
    def quasifib_vacuous(self) -> bool:
        return self.quasifib_dim < 0

    def stratum(self, i: int) -> Stratum:
        for s in self.strata:
            if s.kernel_dim == i:
                return s
        raise KeyError(f"no stratum with kernel dimension {i}")

    def nonempty(self) -> list[Stratum]:
        return [s for s in self.strata if not s.is_empty]


def minor_ideal(inst: MorphismInstance, r: int) -> Ideal:
    """Ideal of the locus where rank A <= r: J plus all (r+1)-minors."""
    top = min(inst.m, inst.n)
    if not 0 <= r <= top:
        raise ValueError(f"rank bound {r} out of range 0..{top}")
    if r == top:
        return inst.ambient
    return Ideal(inst.ctx, inst.ambient.generators + tuple(minors_of_size(inst.matrix, r + 1)))


def _max_rank_on_x(inst: MorphismInstance, budget: int, stats: GroebnerStats | None) -> int:
    # top-down: first size with a minor that does not vanish on X
    for r in range(min(inst.m, inst.n), 0, -1):
        for minor in minors_of_size(inst.matrix, r):
            if not radical_membership(minor, inst.ambient, budget, stats):
                return r
    return 0


def _require_nonempty(inst: MorphismInstance, budget: int, stats: GroebnerStats | None) -> None:
    if is_unit_ideal(inst.ambient, budget, stats):
        raise EmptyVarietyError("X is empty: the ambient ideal is the unit ideal")


def minimal_kernel_dim(
    inst: MorphismInstance, budget: int = DEFAULT_BUDGET, stats: GroebnerStats | None = None
) -> int:
    _require_nonempty(inst, budget, stats)
    return inst.n - _max_rank_on_x(inst, budget, stats)


def stratify(
    inst: MorphismInstance,
    order: str | None = None,
    budget: int = DEFAULT_BUDGET,
    assume_irreducible: bool = False,
    stats: GroebnerStats | None = None,
) -> Stratification:
    if order is not None:
        inst = inst.with_order(order)
    stats = stats if stats is not None else GroebnerStats()
    _require_nonempty(inst, budget, stats)
    n = inst.n
    k_min = n - _max_rank_on_x(inst, budget, stats)
    strata = []
    for i in range(k_min, n + 1):
        ideal = minor_ideal(inst, n - i)
        strata.append(Stratum(i, ideal, is_unit_ideal(ideal, budget, stats)))
    strata.append(Stratum(n + 1, Ideal(inst.ctx, (inst.ctx.one(),)), True))
    for cur, nxt in zip(strata, strata[1:]):
        if cur.is_empty:
            cur.empty_difference = True
        else:
            cur.empty_difference = same_variety(cur.ideal, nxt.ideal, budget, stats)
    strata[-1].empty_difference = True
    k_max = max(s.kernel_dim for s in strata if not s.is_empty)
    certified = (
        inst.ambient.is_zero()
        or assume_irreducible
        or strata[1].is_empty
    )
    return Stratification(
        strata=strata,
        k_min=k_min,
        k_max=k_max,
        generic_rank=GenericRank(k_min, certified),
        quasifib_dim=2 * k_min - 1,
        order=inst.ctx.order,
        stats=stats,
    )


def generic_rank(
    inst: MorphismInstance,
    strat: Stratification | None = None,
    assume_irreducible: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> GenericRank:
    """Candidate generic rank k_min, certified only where density is decidable."""
    if strat is None:
        strat = stratify(inst, budget=budget, assume_irreducible=assume_irreducible)
    if assume_irreducible and not strat.generic_rank.certified:
        return GenericRank(strat.k_min, True)
    return strat.generic_rank


def quasifib_dimension(
    inst: MorphismInstance, strat: Stratification | None = None, budget: int = DEFAULT_BUDGET
) -> int:
    """2k - 1 for the minimal kernel dimension k; -1 means the bound is vacuous."""
    k = strat.k_min if strat is not None else minimal_kernel_dim(inst, budget)
    return 2 * k - 1


def fiber_dim_at(inst: MorphismInstance, point: Sequence[Scalar]) -> int:
    pt = inst.check_point(point)
    return inst.n - bareiss_rank(inst.matrix.evaluate(pt))


def _vanishes(ideal: Ideal, point: Sequence[Fraction]) -> bool:
    return all(not g.evaluate(point) for g in ideal.generators)


class StratificationInconsistency(AssertionError):
    pass


def stratum_of_point(
    inst: MorphismInstance,
    point: Sequence[Scalar],
    strat: Stratification | None = None,
    budget: int = DEFAULT_BUDGET,
) -> int:
    i = fiber_dim_at(inst, point)
    if strat is None:
        strat = stratify(inst, budget=budget)
    pt = [Fraction(v) for v in point]
    if not _vanishes(strat.stratum(i).ideal, pt):
        raise StratificationInconsistency(f"point {pt} has kernel dim {i} but lies off X_{i}")
    if i < strat.k_max and _vanishes(strat.stratum(i + 1).ideal, pt):
        raise StratificationInconsistency(f"point {pt} has kernel dim {i} but lies on X_{i + 1}")
    return i


@dataclass
class SampleReport:
    total: int = 0
    passed: int = 0
    failed: int = 0
    counterexample: tuple[Fraction, ...] | None = None
    fiber_dims: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def random_point(rng: random.Random, arity: int) -> list[Fraction]:
    """Low-height rational point; small integers are favoured so degenerate loci get hit."""
    pt = []
    for _ in range(arity):
        if rng.random() < 0.5:
            pt.append(Fraction(rng.randint(-2, 2)))
        else:
            pt.append(Fraction(rng.randint(-9, 9), rng.randint(1, 5)))
    return pt


def semicontinuity_sample_check(
    inst: MorphismInstance,
    sample_count: int = 200,
    seed: int = 0,
    points: Sequence[Sequence[Scalar]] | None = None,
    strat: Stratification | None = None,
    budget: int = DEFAULT_BUDGET,
) -> SampleReport:
    """Check fiber_dim >= k_min and (x in X_i  <=>  fiber_dim >= i) at sample points."""
    if points is None:
        if not inst.ambient.is_zero():
            raise ValueError("sampling needs the ambient ideal to be zero, or explicit points")
        rng = random.Random(seed)
        points = [random_point(rng, inst.ctx.arity) for _ in range(sample_count)]
    if strat is None:
        strat = stratify(inst, budget=budget)
    report = SampleReport()
    for point in points:
        pt = [Fraction(v) for v in point]
        fd = fiber_dim_at(inst, pt)
        report.total += 1
        report.fiber_dims[fd] += 1
        good = fd >= strat.k_min and all(
            _vanishes(s.ideal, pt) == (fd >= s.kernel_dim) for s in strat.strata
        )
        if good:
            report.passed += 1
        else:
            report.failed += 1
            if report.counterexample is None:
                report.counterexample = tuple(pt)
    return report


def stratifications_agree(
    a: Stratification, b: Stratification, budget: int = DEFAULT_BUDGET
) -> bool:
    """Same k_min, quasifib bound, and zero sets level by level."""
    if (a.k_min, a.quasifib_dim, len(a.strata)) != (b.k_min, b.quasifib_dim, len(b.strata)):
        return False
    return all(
        sa.kernel_dim == sb.kernel_dim and same_variety(sa.ideal, sb.ideal, budget)
        for sa, sb in zip(a.strata, b.strata)
    )
