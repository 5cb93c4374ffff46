import random
from fractions import Fraction

import pytest
import sympy as sp

import oracles
from quadricfano.bundles import ChernData, split
from quadricfano.chow import QuadricContext
from quadricfano.errors import ContractError, NotApplicable
from quadricfano.riemann_roch import chi_hrr, chi_line_oracle, chi_q5, h0_line_oracle, todd_tangent

Q5 = QuadricContext(5)


class TestTodd:
    def test_low_degree_terms(self):
        td = todd_tangent(Q5).value
        assert td[0] == 1
        assert td[1] == Fraction(5, 2)

    @pytest.mark.parametrize("n", range(3, 10))
    def test_against_symbolic_series(self, n):
        assert list(todd_tangent(QuadricContext(n)).value.coeffs) == oracles.todd_quadric(n)

    @pytest.mark.parametrize("n", range(3, 13))
    def test_degree_one_is_half_canonical(self, n):
        assert todd_tangent(QuadricContext(n)).value[1] == Fraction(n, 2)

    def test_guards(self):
        with pytest.raises(ContractError):
            todd_tangent(QuadricContext(2))
        with pytest.raises(ContractError):
            todd_tangent(QuadricContext(13))
        todd_tangent(QuadricContext(13), max_dimension=13)


class TestChiHRR:
    def test_values_on_q5(self):
        assert chi_hrr(Q5, ChernData(0, 0)) == 2
        assert chi_hrr(Q5, ChernData(1, 0)) == 8
        assert chi_hrr(Q5, ChernData(-1, 1)) == -1

    @pytest.mark.parametrize("n", range(3, 9))
    def test_structure_sheaf(self, n):
        assert chi_hrr(QuadricContext(n), ChernData(0, 0)) == 2

    def test_split_oracle(self):
        for a in range(-6, 7):
            for b in range(-6, 7):
                assert chi_hrr(Q5, split(a, b)) == chi_line_oracle(Q5, a) + chi_line_oracle(Q5, b)

    @pytest.mark.parametrize("n", [3, 4, 6, 7, 8])
    def test_split_oracle_other_dimensions(self, n):
        ctx = QuadricContext(n)
        for a in range(-4, 5):
            for b in range(-4, 5):
                assert chi_hrr(ctx, split(a, b)) == chi_line_oracle(ctx, a) + chi_line_oracle(ctx, b)

    def test_integral_on_split(self):
        for a in range(-10, 11):
            for b in range(-10, 11):
                assert chi_hrr(Q5, split(a, b)).denominator == 1


class TestChiQ5:
    @pytest.mark.parametrize("d,expected", [
        ((0, 2), Fraction(-11, 12)),
        ((-1, 2), Fraction(9, 4)),
        ((0, 1), Fraction(1, 8)),
    ])
    def test_printed(self, d, expected):
        assert chi_q5(ChernData(*d), "printed") == expected

    @pytest.mark.parametrize("d,expected", [
        ((0, 2), Fraction(-11, 2)),
        ((-1, 2), Fraction(-7, 3)),
        ((0, 1), Fraction(-13, 6)),
        ((-1, 1), -1),
    ])
    def test_hrr(self, d, expected):
        assert chi_q5(ChernData(*d), "hrr") == expected

    def test_hrr_form_matches_symbolic(self):
        poly, (c1, c2) = oracles.chi_q5_symbolic()
        rng = random.Random(3)
        for _ in range(50):
            a = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
            b = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
            d = ChernData(a, b)
            sym = poly.subs({c1: sp.Rational(a.numerator, a.denominator), c2: sp.Rational(b.numerator, b.denominator)})
            assert chi_q5(d, "hrr") == Fraction(int(sym.p), int(sym.q)) == chi_hrr(Q5, d)

    def test_modes_agree_without_c2(self):
        for c1 in range(-8, 9):
            d = ChernData(Fraction(c1, 3), 0)
            assert chi_q5(d, "printed") == chi_q5(d, "hrr")

    def test_modes_differ_by_quadratic_term(self):
        d = ChernData(3, 5)
        assert chi_q5(d, "printed") - chi_q5(d, "hrr") == Fraction(55, 24) * 5

    def test_unknown_mode(self):
        with pytest.raises(ContractError):
            chi_q5(ChernData(0, 0), "other")


class TestLineOracle:
    def test_values(self):
        assert h0_line_oracle(Q5, 0) == 1
        assert h0_line_oracle(Q5, 1) == 7
        assert h0_line_oracle(Q5, 2) == 27

    def test_negative_h0_not_applicable(self):
        with pytest.raises(NotApplicable):
            h0_line_oracle(Q5, -1)

    @pytest.mark.parametrize("a", range(-12, 13))
    def test_q5_closed_form(self, a):
        assert chi_line_oracle(Q5, a) == Fraction((2 * a + 5) * (a + 1) * (a + 2) * (a + 3) * (a + 4), 120)

    @pytest.mark.parametrize("n", range(3, 10))
    def test_serre_duality(self, n):
        # K = O(-n): chi(O(a)) = (-1)^n chi(O(-n-a))
        ctx = QuadricContext(n)
        for a in range(-8, 9):
            assert chi_line_oracle(ctx, a) == (-1) ** n * chi_line_oracle(ctx, -n - a)
