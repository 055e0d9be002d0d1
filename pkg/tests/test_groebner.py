import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings

from pseudobundle.groebner import (
    GroebnerBudgetExceeded,
    GroebnerStats,
    Ideal,
    buchberger,
    ideal_membership,
    is_reduced,
    is_unit_ideal,
    normal_form,
    radical_membership,
    same_variety,
    spair_certificate,
    variety_dimension,
)
from pseudobundle.poly import Polynomial, VariableContext
from pseudobundle.sampling import random_polynomial

from .conftest import XY, XY_LEX, polynomials

XYZ = VariableContext(("x", "y", "z"))


def I(*gens, ctx=XY):
    return Ideal(ctx, gens)


def _certify(gb):
    assert spair_certificate(gb)
    assert is_reduced(gb)


class TestBuchberger:
    def test_circle_meets_diagonal_lex(self):
        gb = buchberger([XY_LEX.parse("x^2 + y^2 - 1"), XY_LEX.parse("x - y")])
        # oracle: substitute x = y into the circle, 2y^2 = 1
        assert [str(g) for g in gb.elements] == ["x - y", "y^2 - 1/2"]
        _certify(gb)

    def test_unit_ideal(self):
        gb = buchberger([XY.parse("x"), XY.one()])
        assert gb.is_unit() and [str(g) for g in gb.elements] == ["1"]

    def test_single_monomial(self):
        gb = buchberger([XY.parse("x^2")])
        assert [str(g) for g in gb.elements] == ["x^2"]

    def test_zero_generators_ignored(self):
        gb = buchberger([XY.zero(), XY.parse("2*x"), XY.zero()])
        assert [str(g) for g in gb.elements] == ["x"]

    def test_needs_generators_and_budget(self):
        with pytest.raises(ValueError):
            buchberger([])
        with pytest.raises(ValueError):
            buchberger([XY.parse("x")], step_budget=0)

    def test_budget_exhaustion(self):
        gens = [XYZ.parse(s) for s in ("x^3 - y*z^2 + 1", "y^3 - x*z + 2", "z^3 - x^2*y - 3")]
        with pytest.raises(GroebnerBudgetExceeded):
            buchberger(gens, step_budget=2)

    def test_deterministic(self):
        gens = [XYZ.parse(s) for s in ("x*y - z", "y*z - x", "x*z - y^2")]
        a, b = buchberger(gens), buchberger(list(gens))
        assert [g.terms for g in a.elements] == [g.terms for g in b.elements]

    def test_stats_counted(self):
        stats = GroebnerStats()
        buchberger([XY.parse("x^2 - y"), XY.parse("x*y - 1")], stats=stats)
        assert stats.bases == 1 and stats.spair_reductions >= 1


def _sympy_reduced(gens, names, order):
    syms = sympy.symbols(names)
    exprs = [sympy.sympify(str(g).replace("^", "**"), locals=dict(zip(names, syms))) for g in gens]
    G = sympy.groebner(exprs, *syms, order=order, domain="QQ")
    out = []
    for g in G.exprs:
        poly = sympy.Poly(g, *syms)
        lc = poly.LC(order=order)
        out.append({m: Fraction(int(c.p), int(c.q)) / Fraction(int(lc.p), int(lc.q)) for m, c in poly.terms()})
    return out


@pytest.mark.parametrize("order, sym_order", [("grevlex", "grevlex"), ("lex", "lex")])
@pytest.mark.parametrize("seed", range(12))
def test_matches_independent_groebner(order, sym_order, seed):
    rng = random.Random(seed)
    ctx = VariableContext(("x", "y", "z") if seed % 3 == 0 else ("x", "y"), order)
    gens = [random_polynomial(rng, ctx, max_degree=2, density=0.4) for _ in range(rng.randint(1, 3))]
    gens = [g for g in gens if g] or [ctx.var("x")]
    gb = buchberger(gens)
    _certify(gb)
    for g in gens:
        assert normal_form(g, gb).is_zero()
    expected = _sympy_reduced(gens, ctx.names, sym_order)
    got = [dict(g.coeffs) for g in gb.elements]
    assert sorted(map(sorted, map(dict.items, got))) == sorted(map(sorted, map(dict.items, expected)))


@settings(max_examples=40, deadline=None)
@given(polynomials(max_degree=2, max_terms=3), polynomials(max_degree=2, max_terms=3))
def test_certificate_on_random_bases(f, g):
    if f.is_zero() and g.is_zero():
        return
    gb = buchberger([f, g])
    _certify(gb)
    for h in (f, g):
        assert normal_form(h, gb).is_zero()


class TestNormalForm:
    def test_substitution_oracle(self):
        gb = buchberger([XY_LEX.parse("x - y")])
        assert normal_form(XY_LEX.parse("x^2 + y^2"), gb) == XY_LEX.parse("2*y^2")

    def test_generator_reduces_to_zero(self):
        gens = [XY.parse("x^2 - y"), XY.parse("x*y - 1")]
        gb = buchberger(gens)
        assert all(normal_form(g, gb).is_zero() for g in gens)

    def test_constant_is_irreducible(self):
        gb = buchberger([XY.parse("x"), XY.parse("y")])
        assert normal_form(XY.one(), gb) == XY.one()


class TestMembership:
    def test_examples(self):
        assert ideal_membership(XY.parse("x*y"), I("x"))
        assert not ideal_membership(XY.parse("x"), I("x^2"))
        assert ideal_membership(XY.parse("x^2 - y^2"), I("x - y"))

    def test_radical_examples(self):
        assert radical_membership(XY.parse("x"), I("x^2"))
        assert not radical_membership(XY.parse("x"), I("y"))
        # (x+y)^3 = x^3 + 3x^2y + 3xy^2 + y^3, every term divisible by x^2 or y^2
        assert ideal_membership(XY.parse("(x + y)^3"), I("x^2", "y^2"))
        assert radical_membership(XY.parse("x + y"), I("x^2", "y^2"))

    def test_radical_of_zero_ideal(self):
        assert not radical_membership(XY.parse("x"), I())
        assert radical_membership(XY.zero(), I())

    def test_unit(self):
        assert is_unit_ideal(I("x", "x + 1"))
        assert not is_unit_ideal(I("x", "y"))
        assert not is_unit_ideal(I("0"))

    def test_dimension(self):
        assert variety_dimension(I("x", "y")) == 0
        assert variety_dimension(I("x*y")) == 1
        assert variety_dimension(I("1")) == -1
        assert variety_dimension(I()) == 2
        assert variety_dimension(Ideal(XYZ, ["x*y", "x*z"])) == 2

    def test_same_variety(self):
        assert same_variety(I("x^2"), I("x"))
        assert not same_variety(I("x"), I("y"))
        assert same_variety(I("x^2 - y^2", "x - y"), I("x - y"))


SUITE = [
    ([], "x"),
    (["x^2"], "x"),
    (["y"], "x"),
    (["x^2", "y^2"], "x + y"),
    (["x*y"], "x + y"),
    (["x^2 - y^3"], "x*y"),
    (["x^2 + y^2 - 1", "x - y"], "x^2 - 1/2"),
    (["x*y - 1"], "x"),
    (["x^3", "x*y"], "x"),
    (["x", "x + 1"], "y"),
]


@pytest.mark.parametrize("gens, f", SUITE)
def test_decisions_are_order_independent(gens, f):
    a = Ideal(XY, gens)
    b = Ideal(XY_LEX, gens)
    fa, fb = XY.parse(f), XY_LEX.parse(f)
    assert ideal_membership(fa, a) == ideal_membership(fb, b)
    assert radical_membership(fa, a) == radical_membership(fb, b)
    assert is_unit_ideal(a) == is_unit_ideal(b)
    assert variety_dimension(a) == variety_dimension(b)
    other = Ideal(XY, [f])
    assert same_variety(a, other) == same_variety(b, other.with_order("lex"))


def _rabinowitsch_spot_check(f: Polynomial, ideal: Ideal) -> None:
    if radical_membership(f, ideal) and f.total_degree() <= 2:
        assert any(ideal_membership(f**N, ideal) for N in range(1, 7))


@pytest.mark.parametrize("gens, f", SUITE)
def test_rabinowitsch_soundness_suite(gens, f):
    _rabinowitsch_spot_check(XY.parse(f), Ideal(XY, gens))


@settings(max_examples=40, deadline=None)
@given(polynomials(max_degree=2, max_terms=3), polynomials(max_degree=2, max_terms=2))
def test_rabinowitsch_soundness_random(g, f):
    _rabinowitsch_spot_check(f, Ideal(XY, [g * g, g * XY.var("x")]))


def test_ideal_caches_basis_per_order():
    ideal = I("x^2 - y", "x*y")
    assert ideal.cached_basis() is None
    gb = ideal.groebner()
    assert ideal.groebner() is gb
    assert ideal.cached_basis("lex") is None
    assert ideal.groebner("lex").order == "lex"
