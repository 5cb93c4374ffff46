from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quadricfano import series

coeffs = st.lists(st.builds(Fraction, st.integers(-49, 49), st.integers(1, 20)), min_size=1, max_size=8)


def test_geometric_series():
    assert series.inverse((1, -1), 4) == tuple(Fraction(1) for _ in range(5))


def test_inverse_needs_unit():
    with pytest.raises(ZeroDivisionError):
        series.inverse((0, 1), 3)


def test_todd_generator_bernoulli():
    # x/(1-e^{-x}) = 1 + x/2 + x^2/12 - x^4/720 + ...
    assert series.todd_generator(4) == (1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720))


@given(coeffs)
def test_inverse_roundtrip(a):
    if a[0] == 0:
        a[0] = Fraction(1)
    order = 7
    assert series.mul(a, series.inverse(a, order), order) == series.as_series([1], order)


@given(coeffs, st.integers(0, 5))
def test_power_matches_repeated_mul(a, e):
    order = 6
    expected = series.as_series([1], order)
    for _ in range(e):
        expected = series.mul(expected, a, order)
    assert series.power(a, e, order) == expected
