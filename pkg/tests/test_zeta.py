from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from genera import zeta
from genera.constants import CONSTANTS
from genera.errors import CapabilityError, DomainError
from genera.zeta import ZetaEvalContext, ZetaExpr, eval_numeric, zeta_star_sym, zeta_sym


def test_bernoulli_values():
    assert zeta.bernoulli(2) == Fraction(1, 6)
    assert zeta.bernoulli(4) == Fraction(-1, 30)
    assert zeta.bernoulli(12) == Fraction(-691, 2730)
    with pytest.raises(DomainError):
        zeta.bernoulli(3)


def test_even_reduction():
    assert zeta.zeta_even_reduce(2) == ZetaExpr.pi(2) * Fraction(1, 6)
    assert zeta.zeta_even_reduce(4) == ZetaExpr.pi(4) * Fraction(1, 90)
    assert ZetaExpr.zeta(6).reduce_even() == ZetaExpr.pi(6) * Fraction(1, 945)


def test_hoffman_small_cases():
    z2, z4 = ZetaExpr.zeta(2), ZetaExpr.zeta(4)
    assert zeta_sym((2, 2)) == z2 * z2 - z4
    assert zeta_star_sym((2, 2)) == z2 * z2 + z4
    assert str(zeta_star_sym((2, 2))) == "zeta(2)^2 + zeta(4)"
    assert zeta_sym((1, 1)) == ZetaExpr.gamma() ** 2 - z2
    assert zeta_sym((3,)) == ZetaExpr.zeta(3)


def test_star_needs_arguments_above_one():
    with pytest.raises(DomainError):
        zeta_star_sym((2, 1))
    with pytest.raises(DomainError):
        zeta_sym(())


def test_format_fraction():
    assert zeta.format_fraction(Fraction(0)) == "0/1"
    assert zeta.format_fraction(Fraction(-4, 6)) == "-2/3"


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(2, 7), min_size=1, max_size=3))
def test_json_round_trip(t):
    x = zeta_star_sym(t) - zeta_sym(t) * Fraction(1, 3)
    assert ZetaExpr.from_json(x.to_json()) == x


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(2, 5), min_size=1, max_size=3))
def test_reduction_preserves_value(t):
    x = zeta_star_sym(t)
    ctx = ZetaEvalContext(precision=25)
    assert abs(eval_numeric(x, ctx) - eval_numeric(x.reduce_even(), ctx)) < mpmath.mpf(10) ** -20


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(2, 4), min_size=1, max_size=3))
def test_star_dominates(t):
    ctx = ZetaEvalContext(precision=20)
    assert eval_numeric(zeta_star_sym(t), ctx) >= eval_numeric(zeta_sym(t), ctx)


def test_constant_table_matches_mpmath():
    with mpmath.workdps(60):
        assert abs(mpmath.mpf(CONSTANTS["gamma"]) - mpmath.euler) < mpmath.mpf(10) ** -48
        assert abs(mpmath.mpf(CONSTANTS["zeta5"]) - mpmath.zeta(5)) < mpmath.mpf(10) ** -48


def test_euler_maclaurin_routines():
    with mpmath.workdps(90):
        assert abs(zeta.zeta_em(3, 80) - mpmath.zeta(3)) < mpmath.mpf(10) ** -75
        assert abs(zeta.euler_gamma_em(80) - mpmath.euler) < mpmath.mpf(10) ** -75


def test_high_precision_path():
    ctx = ZetaEvalContext(precision=100)
    with mpmath.workdps(110):
        assert abs(eval_numeric(ZetaExpr.zeta(7), ctx) - mpmath.zeta(7)) < mpmath.mpf(10) ** -95


def test_precision_ceiling():
    with pytest.raises(CapabilityError):
        eval_numeric(ZetaExpr.zeta(3), ZetaEvalContext(precision=zeta.MAX_DIGITS + 1))


def test_context_validation():
    with pytest.raises(DomainError):
        ZetaEvalContext(precision=0)


def test_truncated_sums():
    trunc = zeta.mzv_truncated((2,), 10_000)
    assert abs(trunc - mpmath.zeta(2)) < 2e-4
    lhs = zeta.mzv_truncated((3, 2), 2000, star=True)
    rhs = zeta.mzv_truncated((3, 2), 2000) + zeta.mzv_truncated((5,), 2000)
    assert abs(lhs - rhs) < 1e-12
