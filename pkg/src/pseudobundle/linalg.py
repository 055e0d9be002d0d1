"""Exact linear algebra over Q and Q(t), and minors of polynomial matrices."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .poly import ContextMismatchError, Polynomial, Scalar, VariableContext

RationalMatrix = list[list[Fraction]]
Vector = tuple[Fraction, ...]


def as_rational_matrix(rows: Sequence[Sequence[Scalar]]) -> RationalMatrix:
    M = [[Fraction(v) for v in row] for row in rows]
    if not M or not M[0]:
        raise ValueError("matrix must have at least one row and one column")
    if any(len(r) != len(M[0]) for r in M):
        raise ValueError("ragged matrix")
    return M


def bareiss_rank(M: Sequence[Sequence[Scalar]]) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination with full pivoting.

    Rows are first scaled to integers, so every intermediate is an exact
    integer and each division is exact.
    """
    rows = as_rational_matrix(M)
    a = []
    for row in rows:
        scale = math.lcm(*(v.denominator for v in row))
        a.append([int(v * scale) for v in row])
    m, n = len(a), len(a[0])
    prev = 1
    rank = 0
    for k in range(min(m, n)):
        pivot = next(
            ((i, j) for i in range(k, m) for j in range(k, n) if a[i][j]),
            None,
        )
        if pivot is None:
            break
        pi, pj = pivot
        a[k], a[pi] = a[pi], a[k]
        if pj != k:
            for row in a:
                row[k], row[pj] = row[pj], row[k]
        akk = a[k][k]
        for i in range(k + 1, m):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (akk * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
        rank += 1
    return rank


def rref(M: Sequence[Sequence[Scalar]]) -> tuple[RationalMatrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    R = as_rational_matrix(M)
    m, n = len(R), len(R[0])
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if R[i][c]), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [v * inv for v in R[r]]
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [vi - f * vr for vi, vr in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def kernel_basis(M: Sequence[Sequence[Scalar]]) -> list[Vector]:
    """Echelon-normalized basis of the right kernel.

    The returned vectors are the rows of a reduced row echelon matrix: each
    has a leading 1 in a column where every other basis vector is 0.
    """
    R, pivots = rref(M)
    n = len(R[0])
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return []
    raw = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        raw.append(v)
    B, _ = rref(raw)
    return [tuple(row) for row in B]


def mat_vec(M: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> list[Fraction]:
    return [sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in M]


# -- polynomial matrices ---------------------------------------------------


@dataclass(frozen=True)
class PolyMatrix:
    ctx: VariableContext
    rows: tuple[tuple[Polynomial, ...], ...]
    _minor_cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or not rows[0]:
            raise ValueError("matrix must be at least 1x1")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        for r in rows:
            for p in r:
                if p.ctx != self.ctx:
                    raise ContextMismatchError("matrix entry from a different context")

    @classmethod
    def from_texts(cls, ctx: VariableContext, grid: Sequence[Sequence[str]]) -> PolyMatrix:
        return cls(ctx, tuple(tuple(ctx.parse(s) for s in row) for row in grid))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def reorder(self, ctx: VariableContext) -> PolyMatrix:
        return PolyMatrix(ctx, tuple(tuple(p.reorder(ctx) for p in r) for r in self.rows))

    def texts(self) -> list[list[str]]:
        return [[str(p) for p in r] for r in self.rows]

    def minor(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
        """Determinant of the submatrix, by Laplace expansion along the first row."""
        key = (rows, cols)
        cache = self._minor_cache
        if key in cache:
            return cache[key]
        if not rows:
            val = self.ctx.one()
        else:
            r0, rest = rows[0], rows[1:]
            val = self.ctx.zero()
            for j, c in enumerate(cols):
                a = self.rows[r0][c]
                if a.is_zero():
                    continue
                sub = self.minor(rest, cols[:j] + cols[j + 1 :])
                val = val + a * sub if j % 2 == 0 else val - a * sub
        cache[key] = val
        return val

    def evaluate(self, point: Sequence[Scalar]) -> RationalMatrix:
        return [[p.evaluate(point) for p in r] for r in self.rows]

    def substitute(self, curve: Sequence[Polynomial]) -> PolyMatrix:
        target = curve[0].ctx
        return PolyMatrix(target, tuple(tuple(p.substitute(curve) for p in r) for r in self.rows))


def minors_of_size(A: PolyMatrix, r: int) -> list[Polynomial]:
    """All r×r minors, ordered lexicographically by (row subset, column subset)."""
    m, n = A.shape
    if r == 0:
        return [A.ctx.one()]
    if not 1 <= r <= min(m, n):
        raise ValueError(f"minor size {r} out of range for a {m}x{n} matrix")
    return [
        A.minor(R, C)
        for R in itertools.combinations(range(m), r)
        for C in itertools.combinations(range(n), r)
    ]


def evaluate_matrix(A: PolyMatrix, point: Sequence[Scalar]) -> RationalMatrix:
    return A.evaluate(point)


# -- univariate polynomials, dense, coefficients low -> high ----------------

_UPoly = list[Fraction]


def _trim(a: _UPoly) -> _UPoly:
    while a and a[-1] == 0:
        a.pop()
    return a


def _to_dense(p: Polynomial) -> _UPoly:
    if p.ctx.arity != 1:
        raise ValueError("expected a univariate polynomial")
    deg = p.total_degree()
    out = [Fraction(0)] * (deg + 1)
    for (e,), c in p.coeffs.items():
        out[e] = c
    return out


def _from_dense(a: _UPoly, ctx: VariableContext) -> Polynomial:
    return Polynomial(ctx, {(i,): c for i, c in enumerate(a) if c})


def _umul(a: _UPoly, b: _UPoly) -> _UPoly:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _usub(a: _UPoly, b: _UPoly) -> _UPoly:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] -= y
    return _trim(out)


def _udivmod(a: _UPoly, b: _UPoly) -> tuple[_UPoly, _UPoly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lb = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lb
        q[shift] = c
        for i, y in enumerate(b):
            r[i + shift] -= c * y
        _trim(r)
    return _trim(q), r


def _ugcd(a: _UPoly, b: _UPoly) -> _UPoly:
    """Monic gcd; gcd(0, 0) = 0."""
    a, b = list(a), list(b)
    while b:
        a, b = b, _udivmod(a, b)[1]
    if not a:
        return []
    lc = a[-1]
    return [c / lc for c in a]


def _exact_div(a: _UPoly, b: _UPoly) -> _UPoly:
    q, r = _udivmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def univariate_kernel_basis(M: PolyMatrix) -> list[tuple[Polynomial, ...]]:
    """Right kernel over Q(t) of a univariate polynomial matrix.

    Each basis vector has polynomial entries with no common factor and
    integer coefficients of content 1; the entry at its free column has a
    positive leading coefficient.
    """
    ctx = M.ctx
    if ctx.arity != 1:
        raise ValueError("univariate_kernel_basis needs a one-variable context")
    m, n = M.shape
    a = [[_to_dense(p) for p in row] for row in M.rows]
    pivots: list[int] = []
    r = 0
    # fraction-free Gauss-Jordan over Q[t], rows kept primitive
    for c in range(n):
        if r == m:
            break
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(m):
            if i == r or not a[i][c]:
                continue
            f = a[i][c]
            a[i] = [_usub(_umul(piv, x), _umul(f, y)) for x, y in zip(a[i], a[r])]
            a[i] = _primitive_row(a[i])
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        # v[f] = L, v[pc] = -row[f] * L / row[pc] with L = lcm of pivot entries
        L: _UPoly = [Fraction(1)]
        for row, pc in zip(a, pivots):
            piv = row[pc]
            L = _exact_div(_umul(L, piv), _ugcd(L, piv))
        v: list[_UPoly] = [[] for _ in range(n)]
        v[f] = L
        for row, pc in zip(a, pivots):
            if row[f]:
                v[pc] = _usub([], _exact_div(_umul(row[f], L), row[pc]))
        v = _primitive_row(v)
        v = _integer_content_one(v)
        if v[f][-1] < 0:
            v = [[-c for c in x] for x in v]
        basis.append(tuple(_from_dense(x, ctx) for x in v))
    return basis


def _primitive_row(row: list[_UPoly]) -> list[_UPoly]:
    g: _UPoly = []
    for x in row:
        if x:
            g = _ugcd(g, x) if g else _ugcd(x, x)
    if not g or len(g) == 1:
        return row
    return [_exact_div(x, g) if x else [] for x in row]


def _integer_content_one(row: list[_UPoly]) -> list[_UPoly]:
    coeffs = [c for x in row for c in x if c]
    den = math.lcm(*(c.denominator for c in coeffs))
    num = math.gcd(*(int(c * den) for c in coeffs))
    scale = Fraction(den, num)
    return [[c * scale for c in x] for x in row]
