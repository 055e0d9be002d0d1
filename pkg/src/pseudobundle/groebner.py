"""Buchberger's algorithm and the ideal-theoretic queries built on it.

All decisions (membership, radical membership, emptiness, dimension, equality
of zero sets) go through reduced Gröbner bases.  Bases are cached on the
:class:`Ideal` per monomial order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .poly import (
    ContextMismatchError,
    Monomial,
    Polynomial,
    VariableContext,
    monomial_divides,
    monomial_lcm,
)

DEFAULT_BUDGET = 200_000

_Dict = dict[Monomial, Fraction]


class GroebnerBudgetExceeded(RuntimeError):
    """The S-polynomial reduction budget ran out before the basis was complete."""


@dataclass
class GroebnerStats:
    """Work counters, shared across calls that pass the same instance."""

    bases: int = 0
    spair_reductions: int = 0


@dataclass(frozen=True)
class GroebnerBasis:
    ctx: VariableContext
    elements: tuple[Polynomial, ...]
    steps: int = 0

    @property
    def order(self) -> str:
        return self.ctx.order

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial() for g in self.elements]

    def is_unit(self) -> bool:
        return len(self.elements) == 1 and self.elements[0].is_constant()

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return normal_form(f, self).is_zero()


# -- low-level reduction on coefficient dicts --------------------------------


def _lm(p: _Dict, key: Callable) -> Monomial:
    return max(p, key=key)


def _reduce(p: _Dict, basis: Sequence[tuple[Monomial, _Dict]], key: Callable) -> _Dict:
    """Full reduction of ``p`` by monic ``basis``; returns the remainder."""
    p = dict(p)
    rem: _Dict = {}
    while p:
        lm = _lm(p, key)
        c = p[lm]
        for glm, g in basis:
            if monomial_divides(glm, lm):
                q = tuple(a - b for a, b in zip(lm, glm))
                for e, v in g.items():
                    e2 = tuple(a + b for a, b in zip(e, q))
                    nv = p.get(e2, 0) - c * v
                    if nv:
                        p[e2] = nv
                    else:
                        del p[e2]
                break
        else:
            rem[lm] = c
            del p[lm]
    return rem


def _monic(p: _Dict, key: Callable) -> tuple[Monomial, _Dict]:
    lm = _lm(p, key)
    lc = p[lm]
    if lc != 1:
        p = {e: v / lc for e, v in p.items()}
    return lm, p


def _spoly(f: tuple[Monomial, _Dict], g: tuple[Monomial, _Dict], lcm: Monomial) -> _Dict:
    (flm, fd), (glm, gd) = f, g
    qf = tuple(a - b for a, b in zip(lcm, flm))
    qg = tuple(a - b for a, b in zip(lcm, glm))
    out: _Dict = {}
    for e, v in fd.items():
        out[tuple(a + b for a, b in zip(e, qf))] = v
    for e, v in gd.items():
        e2 = tuple(a + b for a, b in zip(e, qg))
        nv = out.get(e2, 0) - v
        if nv:
            out[e2] = nv
        else:
            out.pop(e2, None)
    return out


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(
    gens: Iterable[Polynomial],
    order: str | VariableContext | None = None,
    step_budget: int = DEFAULT_BUDGET,
    stats: GroebnerStats | None = None,
) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are processed by the normal strategy (smallest total degree of the
    lcm of leading monomials, ties by index); coprime leading monomials and
    the chain criterion prune pairs.  ``step_budget`` bounds the number of
    S-polynomial reductions.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    if step_budget <= 0:
        raise ValueError("step_budget must be positive")
    ctx = _target_ctx(gens[0].ctx, order)
    key = ctx.key
    G: list[tuple[Monomial, _Dict]] = []
    for g in gens:
        g = _in_ctx(g, ctx)
        if g.is_zero():
            continue
        G.append(_monic(dict(g.coeffs), key))
    if stats is not None:
        stats.bases += 1
    if not G:
        return GroebnerBasis(ctx, (), 0)
    one = (0,) * ctx.arity
    if any(lm == one for lm, _ in G):
        return GroebnerBasis(ctx, (ctx.one(),), 0)

    pending: dict[tuple[int, int], Monomial] = {}
    for j in range(len(G)):
        for i in range(j):
            pending[(i, j)] = monomial_lcm(G[i][0], G[j][0])

    steps = 0
    while pending:
        (i, j) = min(pending, key=lambda ij: (sum(pending[ij]), ij[0], ij[1]))
        lcm = pending.pop((i, j))
        if _coprime(G[i][0], G[j][0]):
            continue
        if _chain_skip(i, j, lcm, G, pending):
            continue
        steps += 1
        if stats is not None:
            stats.spair_reductions += 1
        if steps > step_budget:
            raise GroebnerBudgetExceeded(
                f"Gröbner budget of {step_budget} S-pair reductions exhausted"
            )
        r = _reduce(_spoly(G[i], G[j], lcm), G, key)
        if not r:
            continue
        new = _monic(r, key)
        if new[0] == one:
            return GroebnerBasis(ctx, (ctx.one(),), steps)
        k = len(G)
        G.append(new)
        for i2 in range(k):
            pending[(i2, k)] = monomial_lcm(G[i2][0], new[0])

    return GroebnerBasis(ctx, _interreduce(G, ctx), steps)


def _chain_skip(i: int, j: int, lcm: Monomial, G, pending) -> bool:
    for k in range(len(G)):
        if k == i or k == j:
            continue
        if not monomial_divides(G[k][0], lcm):
            continue
        if (min(i, k), max(i, k)) in pending or (min(j, k), max(j, k)) in pending:
            continue
        return True
    return False


def _interreduce(G: list[tuple[Monomial, _Dict]], ctx: VariableContext) -> tuple[Polynomial, ...]:
    key = ctx.key
    minimal = []
    for idx, (lm, g) in enumerate(G):
        dominated = False
        for idx2, (lm2, _) in enumerate(G):
            if idx2 == idx or not monomial_divides(lm2, lm):
                continue
            if lm2 != lm or idx2 < idx:
                dominated = True
                break
        if not dominated:
            minimal.append((lm, g))
    reduced = []
    for idx, (lm, g) in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        tail = {e: v for e, v in g.items() if e != lm}
        r = _reduce(tail, others, key)
        r[lm] = Fraction(1)
        reduced.append(Polynomial._raw(ctx, r))
    reduced.sort(key=lambda p: key(p.leading_monomial()), reverse=True)
    return tuple(reduced)


def _target_ctx(ctx: VariableContext, order: str | VariableContext | None) -> VariableContext:
    if order is None:
        return ctx
    if isinstance(order, VariableContext):
        if order.names != ctx.names:
            raise ContextMismatchError(f"{order.names} != {ctx.names}")
        return order
    return ctx.with_order(order)


def _in_ctx(f: Polynomial, ctx: VariableContext) -> Polynomial:
    if f.ctx == ctx:
        return f
    return f.reorder(ctx)


def normal_form(f: Polynomial, basis: GroebnerBasis) -> Polynomial:
    """Remainder of ``f`` under full division by ``basis``; zero iff ``f`` is in the ideal."""
    ctx = basis.ctx
    f = _in_ctx(f, ctx)
    G = [(g.leading_monomial(), g.coeffs) for g in basis.elements]
    r = _reduce(dict(f.coeffs), G, ctx.key)
    return Polynomial._raw(ctx, r)


def spair_certificate(basis: GroebnerBasis) -> bool:
    """Exhaustively check that every S-polynomial reduces to zero."""
    ctx = basis.ctx
    G = [(g.leading_monomial(), dict(g.coeffs)) for g in basis.elements]
    for (i, f), (j, g) in itertools.combinations(enumerate(G), 2):
        lcm = monomial_lcm(f[0], g[0])
        if _reduce(_spoly(f, g, lcm), G, ctx.key):
            return False
    return True


def is_reduced(basis: GroebnerBasis) -> bool:
    """Monic, and no term of any element is divisible by another leading monomial."""
    lms = basis.leading_monomials()
    for idx, g in enumerate(basis.elements):
        if g.leading_coefficient() != 1:
            return False
        for e in g.coeffs:
            if any(monomial_divides(m, e) for k, m in enumerate(lms) if k != idx):
                return False
    return True


# -- ideals ------------------------------------------------------------------


class Ideal:
    """Ideal of a polynomial ring, given by generators.

    Gröbner bases are computed lazily and cached per monomial order; the
    cache never changes which ideal is represented.
    """

    def __init__(self, ctx: VariableContext, generators: Iterable[Polynomial | str] = ()):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ctx.parse(g)
            elif g.ctx.names != ctx.names:
                raise ContextMismatchError(f"{g.ctx.names} != {ctx.names}")
            gens.append(_in_ctx(g, ctx))
        self.ctx = ctx
        self.generators: tuple[Polynomial, ...] = tuple(gens)
        self._bases: dict[VariableContext, GroebnerBasis] = {}

    def __repr__(self) -> str:
        return f"Ideal({[str(g) for g in self.generators]}, vars={self.ctx.names})"

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.generators)

    def nonzero_generators(self) -> list[Polynomial]:
        return [g for g in self.generators if not g.is_zero()]

    def with_order(self, order: str) -> Ideal:
        return Ideal(self.ctx.with_order(order), self.generators)

    def __add__(self, other: Ideal) -> Ideal:
        if other.ctx.names != self.ctx.names:
            raise ContextMismatchError(f"{other.ctx.names} != {self.ctx.names}")
        return Ideal(self.ctx, self.generators + other.generators)

    def cached_basis(self, order: str | VariableContext | None = None) -> GroebnerBasis | None:
        return self._bases.get(_target_ctx(self.ctx, order))

    def groebner(
        self,
        order: str | VariableContext | None = None,
        budget: int = DEFAULT_BUDGET,
        stats: GroebnerStats | None = None,
    ) -> GroebnerBasis:
        ctx = _target_ctx(self.ctx, order)
        gb = self._bases.get(ctx)
        if gb is None:
            gens = list(self.generators) or [self.ctx.zero()]
            gb = buchberger(gens, ctx, budget, stats)
            self._bases[ctx] = gb
        return gb


def ideal_membership(
    f: Polynomial, I: Ideal, budget: int = DEFAULT_BUDGET, stats: GroebnerStats | None = None
) -> bool:
    if f.ctx.names != I.ctx.names:
        raise ContextMismatchError(f"{f.ctx.names} != {I.ctx.names}")
    if f.is_zero():
        return True
    return I.groebner(budget=budget, stats=stats).contains(f)


def radical_membership(
    f: Polynomial, I: Ideal, budget: int = DEFAULT_BUDGET, stats: GroebnerStats | None = None
) -> bool:
    """True iff ``f`` vanishes on V(I), via 1 ∈ I + (1 - t·f) with a fresh ``t``."""
    if f.ctx.names != I.ctx.names:
        raise ContextMismatchError(f"{f.ctx.names} != {I.ctx.names}")
    if f.is_zero():
        return True
    if I.is_zero():
        # a nonzero polynomial does not vanish on all of affine space
        return False
    gb = I.groebner(budget=budget, stats=stats)
    if gb.is_unit() or gb.contains(f):
        return True
    if f.is_constant():
        return False
    ext = I.ctx.extend(I.ctx.fresh_name("t"))
    t = ext.var(ext.names[-1])
    gens = [g.embed(ext) for g in I.nonzero_generators()]
    gens.append(1 - t * f.reorder(I.ctx).embed(ext))
    return buchberger(gens, ext, budget, stats).is_unit()


def is_unit_ideal(I: Ideal, budget: int = DEFAULT_BUDGET, stats: GroebnerStats | None = None) -> bool:
    if I.is_zero():
        return False
    return I.groebner(budget=budget, stats=stats).is_unit()


def variety_dimension(
    I: Ideal, budget: int = DEFAULT_BUDGET, stats: GroebnerStats | None = None
) -> int:
    """Krull dimension of V(I): largest variable set avoided by every leading monomial.

    Returns -1 for the empty variety.
    """
    n = I.ctx.arity
    if I.is_zero():
        return n
    gb = I.groebner(budget=budget, stats=stats)
    if gb.is_unit():
        return -1
    supports = [frozenset(i for i, a in enumerate(m) if a) for m in gb.leading_monomials()]
    for size in range(n, -1, -1):
        for U in itertools.combinations(range(n), size):
            u = frozenset(U)
            if not any(s <= u for s in supports):
                return size
    return 0


def same_variety(
    I: Ideal, J: Ideal, budget: int = DEFAULT_BUDGET, stats: GroebnerStats | None = None
) -> bool:
    """True iff V(I) = V(J) over the complex numbers."""
    if I.ctx.names != J.ctx.names:
        raise ContextMismatchError(f"{I.ctx.names} != {J.ctx.names}")
    ui, uj = is_unit_ideal(I, budget, stats), is_unit_ideal(J, budget, stats)
    if ui or uj:
        return ui == uj
    if variety_dimension(I, budget, stats) != variety_dimension(J, budget, stats):
        return False
    return all(radical_membership(g, J, budget, stats) for g in I.nonzero_generators()) and all(
        radical_membership(g, I, budget, stats) for g in J.nonzero_generators()
    )
