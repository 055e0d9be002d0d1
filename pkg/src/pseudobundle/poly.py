"""Exact multivariate polynomials over the rationals.

Polynomials live in a :class:`VariableContext`, which fixes the variable
names and the monomial order.  Every :class:`Polynomial` keeps its terms in
canonical form: no zero coefficients, monomials strictly decreasing in the
context order.  Two polynomials that are equal have identical term sequences.

Example:
    >>> ctx = VariableContext(("x", "y"))
    >>> x, y = ctx.gens()
    >>> print((x + y) * (x - y))
    x^2 - y^2
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Mapping, Sequence, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]

ORDERS = ("grevlex", "lex", "block")


class ContextMismatchError(ValueError):
    """Operands belong to different variable contexts."""


def _grevlex_key(e: Monomial) -> tuple:
    return (sum(e), tuple(-a for a in reversed(e)))


@dataclass(frozen=True)
class VariableContext:
    """Ordered variable names plus a monomial order.

    ``order`` is one of ``"grevlex"`` (default), ``"lex"`` or ``"block"``.
    The block order compares ``names[:split]`` by grevlex first and breaks
    ties by grevlex on the remaining variables.
    """

    names: tuple[str, ...]
    order: str = "grevlex"
    split: int | None = None

    def __post_init__(self) -> None:
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a context needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if self.order not in ORDERS:
            raise ValueError(f"unknown monomial order {self.order!r}")
        if self.order == "block":
            if self.split is None or not 0 < self.split < len(names):
                raise ValueError("block order needs 0 < split < number of variables")
        elif self.split is not None:
            raise ValueError("split is only meaningful for the block order")

    @property
    def arity(self) -> int:
        return len(self.names)

    @cached_property
    def key(self) -> Callable[[Monomial], tuple]:
        """Sort key: ``key(a) > key(b)`` iff monomial ``a`` is larger."""
        if self.order == "lex":
            return tuple
        if self.order == "grevlex":
            return _grevlex_key
        s = self.split

        def block_key(e: Monomial) -> tuple:
            return (_grevlex_key(e[:s]), _grevlex_key(e[s:]))

        return block_key

    def with_order(self, order: str, split: int | None = None) -> VariableContext:
        return VariableContext(self.names, order, split)

    def extend(self, name: str) -> VariableContext:
        """Context with one extra variable appended last (grevlex)."""
        return VariableContext(self.names + (name,))

    def fresh_name(self, stem: str = "t") -> str:
        name, i = stem, 0
        while name in self.names:
            i += 1
            name = f"{stem}{i}"
        return name

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}; context has {self.names}") from None

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c: Scalar) -> Polynomial:
        return Polynomial(self, {(0,) * self.arity: Fraction(c)})

    def var(self, name: str) -> Polynomial:
        e = [0] * self.arity
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> tuple[Polynomial, ...]:
        return tuple(self.var(n) for n in self.names)

    def parse(self, text: str) -> Polynomial:
        from .parse import parse_polynomial

        return parse_polynomial(text, self)


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


class Polynomial:
    """Immutable polynomial with :class:`~fractions.Fraction` coefficients.

    Construct through a context (``ctx.var``, ``ctx.parse``) or directly from
    a ``{exponents: coefficient}`` mapping; zero coefficients are dropped.
    """

    __slots__ = ("ctx", "_coeffs", "_terms", "_hash")

    def __init__(self, ctx: VariableContext, coeffs: Mapping[Monomial, Scalar]):
        n = ctx.arity
        clean: dict[Monomial, Fraction] = {}
        for e, c in coeffs.items():
            if len(e) != n or any(a < 0 for a in e):
                raise ValueError(f"bad exponent vector {e} for arity {n}")
            if c:
                clean[tuple(e)] = Fraction(c)
        self.ctx = ctx
        self._coeffs = clean
        self._terms: tuple[tuple[Fraction, Monomial], ...] | None = None
        self._hash: int | None = None

    @classmethod
    def _raw(cls, ctx: VariableContext, coeffs: dict[Monomial, Fraction]) -> Polynomial:
        # trusted constructor: coeffs already clean
        p = object.__new__(cls)
        p.ctx = ctx
        p._coeffs = coeffs
        p._terms = None
        p._hash = None
        return p

    # -- structure -----------------------------------------------------

    @property
    def coeffs(self) -> Mapping[Monomial, Fraction]:
        return self._coeffs

    @property
    def terms(self) -> tuple[tuple[Fraction, Monomial], ...]:
        """Canonical ``(coefficient, monomial)`` pairs, decreasing in the order."""
        if self._terms is None:
            key = self.ctx.key
            self._terms = tuple(
                (self._coeffs[e], e) for e in sorted(self._coeffs, key=key, reverse=True)
            )
        return self._terms

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._coeffs)

    def leading_monomial(self) -> Monomial:
        if not self._coeffs:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][1]

    def leading_coefficient(self) -> Fraction:
        if not self._coeffs:
            return Fraction(0)
        return self.terms[0][0]

    def total_degree(self) -> int:
        return max((sum(e) for e in self._coeffs), default=-1)

    def constant_term(self) -> Fraction:
        return self._coeffs.get((0,) * self.ctx.arity, Fraction(0))

    def monic(self) -> Polynomial:
        lc = self.leading_coefficient()
        if lc == 0 or lc == 1:
            return self
        return self * (1 / lc)

    def reorder(self, ctx: VariableContext) -> Polynomial:
        """Same polynomial viewed in a context with the same names."""
        if ctx.names != self.ctx.names:
            raise ContextMismatchError(f"{ctx.names} != {self.ctx.names}")
        return Polynomial._raw(ctx, self._coeffs)

    def embed(self, ctx: VariableContext) -> Polynomial:
        """Embed into a context whose names extend ours by trailing variables."""
        k = self.ctx.arity
        if ctx.names[:k] != self.ctx.names:
            raise ContextMismatchError(f"{ctx.names} does not extend {self.ctx.names}")
        pad = (0,) * (ctx.arity - k)
        return Polynomial._raw(ctx, {e + pad: c for e, c in self._coeffs.items()})

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other: object) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ctx != self.ctx:
                raise ContextMismatchError(
                    f"context {other.ctx.names}/{other.ctx.order} vs "
                    f"{self.ctx.names}/{self.ctx.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.constant(other)
        return NotImplemented

    def __add__(self, other: object) -> Polynomial:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in o._coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.ctx, {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: object) -> Polynomial:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: object) -> Polynomial:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: object) -> Polynomial:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in o._coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw(self.ctx, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = self.ctx.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_term(self, c: Fraction, m: Monomial) -> Polynomial:
        return Polynomial._raw(
            self.ctx,
            {tuple(a + b for a, b in zip(e, m)): c * v for e, v in self._coeffs.items()}
            if c
            else {},
        )

    # -- evaluation --------------------------------------------------------

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.ctx.arity:
            raise ValueError(f"point has {len(point)} coordinates, context has {self.ctx.arity}")
        pt = [Fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self._coeffs.items():
            v = c
            for x, a in zip(pt, e):
                if a:
                    v *= x**a
            total += v
        return total

    def substitute(self, images: Sequence[Polynomial]) -> Polynomial:
        """Compose with ``images[j]`` in place of variable ``j``.

        All images must share one target context, which need not be ours.
        """
        if len(images) != self.ctx.arity:
            raise ValueError(f"need {self.ctx.arity} substitutions, got {len(images)}")
        target = images[0].ctx
        if any(q.ctx != target for q in images):
            raise ContextMismatchError("substitution images live in different contexts")
        powers: list[dict[int, Polynomial]] = [{0: target.one(), 1: q} for q in images]

        def power(j: int, a: int) -> Polynomial:
            cache = powers[j]
            if a not in cache:
                cache[a] = images[j] ** a
            return cache[a]

        out = target.zero()
        for e, c in self._coeffs.items():
            term = target.constant(c)
            for j, a in enumerate(e):
                if a:
                    term = term * power(j, a)
            out = out + term
        return out

    # -- comparison / printing -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == ({(0,) * self.ctx.arity: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ctx, frozenset(self._coeffs.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r}, vars={self.ctx.names})"


def _format_monomial(e: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, a in zip(names, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Render in context order with explicit ``*`` and ``^``; parses back identically."""
    if p.is_zero():
        return "0"
    out = []
    for i, (c, e) in enumerate(p.terms):
        mono = _format_monomial(e, p.ctx.names)
        mag = abs(c)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if i == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def poly_arith(op: str, a: Polynomial, b: Polynomial | int) -> Polynomial:
    """Dispatch ``add``/``sub``/``mul``/``pow``; ``b`` is the exponent for ``pow``."""
    if op == "pow":
        return a ** b
    if not isinstance(b, Polynomial):
        raise TypeError("add/sub/mul need a polynomial second operand")
    a._coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def poly_evaluate(p: Polynomial, point: Sequence[Scalar]) -> Fraction:
    return p.evaluate(point)


def substitute_curve(p: Polynomial, curve: Sequence[Polynomial]) -> Polynomial:
    """Restrict ``p`` to a parametrized curve given by univariate polynomials."""
    if curve and curve[0].ctx.arity != 1:
        raise ValueError("curve components must be univariate")
    return p.substitute(curve)

