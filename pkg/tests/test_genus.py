from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from genera import genus
from genera.errors import CapabilityError, DomainError
from genera.lattice import IntPartition, partitions_of
from genera.zeta import ZetaExpr, as_zeta

TODD = genus.builtin_genus("todd")
TD_HALF = genus.builtin_genus("td_half")
GAMMA = genus.builtin_genus("gamma")


def reduced(x):
    return as_zeta(x).reduce_even()


def test_todd_b_sequence():
    assert genus.b_sequence(TODD, 4) == [Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720)]


def test_todd_small_tables():
    t2 = genus.coefficient_table(TODD, 2)
    assert t2 == {IntPartition((2,)): Fraction(1, 12), IntPartition((1, 1)): Fraction(1, 12)}
    t4 = genus.coefficient_table(TODD, 4)
    assert t4[IntPartition((2, 2))] == Fraction(1, 240)
    assert t4[IntPartition((1, 1, 1, 1))] == Fraction(-1, 720)


def test_td_half_values():
    assert genus.coefficient(TD_HALF, (2,)) == Fraction(1, 24)
    assert genus.coefficient(TD_HALF, (4,)) == Fraction(-1, 1440)
    assert genus.coefficient(TD_HALF, (2, 2)) == Fraction(7, 5760)


def test_gamma_low_order():
    g, z2 = ZetaExpr.gamma(), ZetaExpr.zeta(2)
    assert genus.coefficient(GAMMA, (1,)) == g
    assert genus.coefficient(GAMMA, (1, 1)) == (g * g - z2) * Fraction(1, 2)


def test_empty_partition():
    assert genus.coefficient(TODD, ()) == 1


def test_unknown_genus():
    with pytest.raises(DomainError):
        genus.builtin_genus("elliptic")


def test_ceilings():
    with pytest.raises(CapabilityError):
        genus.coefficient_table(TODD, genus.MAX_TABLE_WEIGHT + 1)
    with pytest.raises(CapabilityError):
        genus.expansion_oracle(TODD, genus.MAX_ORACLE_WEIGHT + 1)
    with pytest.raises(CapabilityError):
        genus.coefficient(TODD, (1,) * (genus.MAX_LENGTH + 1))


@pytest.mark.parametrize("name", genus.BUILTINS)
@pytest.mark.parametrize("n", range(1, 6))
def test_oracle_agreement(name, n):
    g = genus.builtin_genus(name)
    oracle = genus.expansion_oracle(g, n)
    for lam, v in genus.coefficient_table(g, n).items():
        assert reduced(v) == reduced(oracle[lam])


def test_todd_closed_form_examples():
    assert genus.closed_form_todd_even((2, 2)).reduce_even() == Fraction(1, 240)
    with pytest.raises(DomainError):
        genus.closed_form_todd_even((2, 1))
    with pytest.raises(DomainError):
        genus.closed_form_todd_even((3,))


def test_td_half_even_odd_weight_vanishes():
    assert genus.closed_form_td_half_even((3,)) == 0
    with pytest.raises(DomainError):
        genus.closed_form_td_half_even((3, 1))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_parity_vanishing(lam):
    if genus.vanishes_by_parity(lam):
        assert genus.coefficient(TODD, lam) == 0
        assert genus.coefficient(TD_HALF, lam) == 0


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_td_half_sign_law(lam):
    value = genus.closed_form_td_half(lam).reduce_even().to_fraction()
    assert value != 0
    assert (value > 0) == ((lam.weight() - lam.length()) % 2 == 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 8).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_even_closed_forms(lam):
    if lam.multiplicity(1):
        return
    assert genus.closed_form_td_half_even(lam).reduce_even() == genus.coefficient(TD_HALF, lam)
    if lam.weight() % 2 == 0:
        assert genus.closed_form_todd_even(lam).reduce_even() == genus.coefficient(TODD, lam)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_gamma_closed_form(lam):
    assert genus.closed_form_gamma(lam) == genus.coefficient(GAMMA, lam)
