from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from genera.errors import DomainError
from genera.series import FormalSeries

ORDER = 8
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def series(const=None):
    head = st.just(Fraction(const)) if const is not None else rationals
    return st.tuples(head, st.lists(rationals, min_size=ORDER, max_size=ORDER)).map(
        lambda t: FormalSeries([t[0]] + t[1]))


def test_exp_coefficients():
    e = FormalSeries.x(ORDER).exp()
    assert [e[k] for k in range(5)] == [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)]


def test_log_requires_unit_constant():
    with pytest.raises(DomainError):
        FormalSeries([2, 1]).log()


def test_inverse_requires_nonzero_constant():
    with pytest.raises((DomainError, ZeroDivisionError)):
        FormalSeries([0, 1]).inverse()


@settings(max_examples=40, deadline=None)
@given(series(1))
def test_exp_log_round_trip(f):
    assert f.log().exp() == f


@settings(max_examples=40, deadline=None)
@given(series(1))
def test_sqrt_squares_back(f):
    r = f.sqrt()
    assert r * r == f


@settings(max_examples=40, deadline=None)
@given(series(), series(1))
def test_division(f, g):
    assert (f / g) * g == f


@settings(max_examples=40, deadline=None)
@given(series(), series())
def test_product_rule(f, g):
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


def test_power_one_third():
    f = FormalSeries([1, 1] + [0] * (ORDER - 1))
    c = f.power(Fraction(1, 3))
    assert c * c * c == f
