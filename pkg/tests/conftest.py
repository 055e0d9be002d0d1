from __future__ import annotations

import itertools
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from pseudobundle.poly import Polynomial, VariableContext
from pseudobundle.report import load_instance

FIXTURES = Path(__file__).parent / "fixtures"

# instance fixtures with a nonempty X, used by the order-independence checks
GOOD_FIXTURES = [
    "xy.json",
    "sym2.json",
    "zero12.json",
    "identity2.json",
    "diag_on_lines.json",
    "xy_at_origin.json",
    "cusp.json",
    "shift23.json",
    "planes24.json",
]

XY = VariableContext(("x", "y"))
XY_LEX = VariableContext(("x", "y"), "lex")


@pytest.fixture
def fixture_path():
    return lambda name: FIXTURES / name


@pytest.fixture
def load():
    return lambda name, order="grevlex": load_instance(FIXTURES / name, order)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def polynomials(draw, ctx: VariableContext = XY, max_degree: int = 3, max_terms: int = 5):
    n = ctx.arity
    exps = st.tuples(*[st.integers(0, max_degree)] * n)
    coeffs = draw(st.dictionaries(exps, rationals, max_size=max_terms))
    return Polynomial(ctx, coeffs)


@st.composite
def points(draw, arity: int = 2):
    return [draw(rationals) for _ in range(arity)]


def det_cofactor(M) -> Fraction:
    """Determinant by cofactor expansion; independent of the elimination code."""
    n = len(M)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for j in range(n):
        if M[0][j]:
            sub = [row[:j] + row[j + 1 :] for row in M[1:]]
            total += (-1) ** j * M[0][j] * det_cofactor(sub)
    return total


def rank_by_minors(M) -> int:
    """Largest size of a nonvanishing minor, each computed by cofactors."""
    m, n = len(M), len(M[0])
    for r in range(min(m, n), 0, -1):
        for R in itertools.combinations(range(m), r):
            for C in itertools.combinations(range(n), r):
                if det_cofactor([[M[i][j] for j in C] for i in R]):
                    return r
    return 0
