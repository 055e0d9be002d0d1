from math import comb

import pytest
import sympy

from pseudobundle.jacobi import (
    NotSurjectiveError,
    PoincarePolynomial,
    bounds_report,
    compare_with_product,
    cp_poincare,
    mattuck_product_check,
    product_poincare,
    quasifib_range_check,
    sp_poincare,
    torus_poincare,
)

P = lambda *c: PoincarePolynomial(tuple(c))  # noqa: E731


def series_oracle(g: int, d: int) -> list[int]:
    x, t = sympy.symbols("x t")
    gen = (1 + x * t) ** (2 * g) / ((1 - x) * (1 - x * t**2))
    coeff = sympy.series(gen, x, 0, d + 1).removeO().coeff(x, d)
    poly = sympy.Poly(sympy.expand(coeff), t)
    return [int(poly.coeff_monomial(t**j)) for j in range(2 * d + 1)]


class TestPoincare:
    def test_examples(self):
        assert sp_poincare(1, 1) == P(1, 2, 1)
        assert sp_poincare(2, 3) == P(1, 4, 7, 8, 7, 4, 1)
        assert sp_poincare(0, 3) == P(1, 0, 1, 0, 1, 0, 1)
        assert sp_poincare(3, 0) == P(1)

    def test_torus_and_projective(self):
        assert torus_poincare(0) == P(1)
        assert torus_poincare(1) == P(1, 2, 1)
        assert torus_poincare(3).coeffs == tuple(comb(6, j) for j in range(7))
        assert cp_poincare(0) == P(1)
        assert cp_poincare(1) == P(1, 0, 1)
        assert cp_poincare(2) == P(1, 0, 1, 0, 1)

    @pytest.mark.parametrize("g, d", [(g, d) for g in range(0, 4) for d in range(0, 6)])
    def test_generating_function_oracle(self, g, d):
        assert list(sp_poincare(g, d).coeffs) == series_oracle(g, d)

    @pytest.mark.parametrize("g", range(0, 6))
    @pytest.mark.parametrize("d", range(0, 8))
    def test_poincare_duality(self, g, d):
        p = sp_poincare(g, d)
        assert p.degree == 2 * d and p.is_palindromic() and p.betti(0) == 1

    @pytest.mark.parametrize("g", range(0, 5))
    @pytest.mark.parametrize("d", range(0, 7))
    def test_euler_characteristic(self, g, d):
        # coefficient of x^d in (1 - x)^(2g - 2)
        expected = (-1) ** d * comb(2 * g - 2, d) if g >= 1 else d + 1
        assert sp_poincare(g, d)(-1) == expected

    def test_guards(self):
        with pytest.raises(ValueError):
            sp_poincare(9, 1)
        with pytest.raises(ValueError):
            sp_poincare(1, -1)
        with pytest.raises(ValueError):
            cp_poincare(-1)

    def test_str(self):
        assert str(P(1, 2, 1)) == "1 + 2*t + t^2"


class TestMattuck:
    def test_examples(self):
        assert mattuck_product_check(2, 3)
        assert sp_poincare(2, 3) == product_poincare(2, 3)
        assert mattuck_product_check(0, 5)
        assert mattuck_product_check(1, 1)

    def test_grid(self):
        for g in range(0, 7):
            for d in range(max(0, 2 * g - 1), 2 * g + 5):
                assert mattuck_product_check(g, d), (g, d)

    def test_precondition(self):
        with pytest.raises(ValueError):
            mattuck_product_check(3, 4)


class TestRange:
    @pytest.mark.parametrize(
        "g, d, diverge, sp_b, prod_b",
        [(3, 4, 4, 31, 30), (2, 2, 2, 7, 6), (4, 6, 6, 127, 126)],
    )
    def test_examples(self, g, d, diverge, sp_b, prod_b):
        rep = quasifib_range_check(g, d)
        assert rep.agree_through == 2 * (d - g) + 1
        assert rep.first_divergence == diverge
        assert (rep.sp.betti(diverge), rep.product.betti(diverge)) == (sp_b, prod_b)

    def test_pattern(self):
        for g in range(2, 7):
            for d in range(g, 2 * g - 1):
                rep = quasifib_range_check(g, d)
                assert rep.agree_through >= 2 * (d - g) + 1

    def test_precondition(self):
        with pytest.raises(ValueError):
            quasifib_range_check(2, 3)
        with pytest.raises(ValueError):
            quasifib_range_check(1, 1)

    def test_fibre_bundle_range_agrees_everywhere(self):
        rep = compare_with_product(2, 5)
        assert rep.first_divergence is None and rep.agree_through == 10

    def test_rows(self):
        rows = quasifib_range_check(2, 2).rows()
        assert rows[2] == (2, 7, 6) and len(rows) == 5


class TestBounds:
    def test_in_range(self):
        b = bounds_report(3, 4, 1)
        assert (b.abel_jacobi_qf_dim, b.hol_qf_dim, b.pseudo_bundle_generic_rank) == (3, 1, 2)
        assert b.inclusion_equiv_dim == 1 and b.in_quasifibration_range
        assert b.fibre_bundle_fibre_dim is None

    def test_beyond_range(self):
        b = bounds_report(2, 4, 2)
        assert b.inclusion_equiv_dim == 6
        assert b.abel_jacobi_qf_dim is None and b.hol_qf_dim is None
        assert b.fibre_bundle_fibre_dim == 2

    def test_without_map_degree(self):
        b = bounds_report(3, 4)
        assert b.hol_qf_dim is None and b.inclusion_equiv_dim is None
        assert b.abel_jacobi_qf_dim == 3

    def test_not_surjective(self):
        with pytest.raises(NotSurjectiveError):
            bounds_report(3, 2)
        with pytest.raises(NotSurjectiveError):
            product_poincare(3, 2)

    def test_bad_map_degree(self):
        with pytest.raises(ValueError):
            bounds_report(3, 4, 0)
