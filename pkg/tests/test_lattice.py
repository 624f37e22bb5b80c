import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from genera import lattice
from genera.errors import DomainError
from genera.lattice import IntPartition, SetPartition, WeightSystem, partitions_of
from genera.verify import mobius_by_recursion, random_weight_system

BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]


def set_partitions(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.sampled_from(lattice.enumerate_set_partitions(n)))


def test_partition_validation():
    with pytest.raises(ValueError):
        IntPartition((1, 2))
    with pytest.raises(ValueError):
        IntPartition((2, 0))
    assert IntPartition.of([1, 3, 2]) == IntPartition((3, 2, 1))


def test_partition_statistics():
    lam = IntPartition((3, 3, 1))
    assert lam.weight() == 7 and lam.length() == 3
    assert lam.multiplicity(3) == 2 and lam.multiplicity(2) == 0
    assert lam.mult_factorial() == 2
    assert lam.factorial() == 6 * 6
    assert lam.doubled() == IntPartition((6, 6, 2))
    assert IntPartition((4, 2)).halved() == IntPartition((2, 1))


def test_partitions_of_counts_and_order():
    assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_bell_counts():
    for n in range(1, 11):
        assert len(lattice.enumerate_set_partitions(n)) == BELL[n] == lattice.bell(n)


def test_rgs_order():
    rgs = [p.rgs() for p in lattice.enumerate_set_partitions(4)]
    assert rgs == sorted(rgs)
    assert rgs[0] == (0, 0, 0, 0) and rgs[-1] == (0, 1, 2, 3)


def test_enumeration_bounds():
    with pytest.raises(DomainError):
        lattice.enumerate_set_partitions(0)
    with pytest.raises(DomainError):
        lattice.enumerate_set_partitions(lattice.MAX_ENUMERATION + 1)


def test_set_partition_canonical():
    a = SetPartition.from_blocks([[3], [2, 1]])
    b = SetPartition.from_rgs((0, 0, 1))
    assert a == b and a.to_list() == [[1, 2], [3]]
    assert a.type() == IntPartition((2, 1))
    with pytest.raises(ValueError):
        SetPartition.from_blocks([[1, 2], [2, 3]])


def test_mobius_example():
    pi = SetPartition.from_blocks([[1], [2], [3]])
    rho = SetPartition.from_blocks([[1, 2, 3]])
    assert lattice.mobius(pi, rho) == 2


def test_mobius_incomparable_is_zero():
    a = SetPartition.from_blocks([[1, 2], [3]])
    b = SetPartition.from_blocks([[1, 3], [2]])
    assert lattice.mobius(a, b) == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_mobius_bottom_top(n):
    expected = (-1) ** (n - 1) * math.factorial(n - 1)
    assert lattice.mobius(SetPartition.bottom(n), SetPartition.top(n)) == expected


@settings(max_examples=60, deadline=None)
@given(set_partitions(5), st.data())
def test_mobius_matches_recursion(pi, data):
    rho = data.draw(st.sampled_from(lattice.coarsenings(pi)))
    assert lattice.mobius(pi, rho) == mobius_by_recursion(pi, rho)


@settings(max_examples=60, deadline=None)
@given(set_partitions(6))
def test_upper_interval_sum_vanishes(pi):
    if pi == SetPartition.top(pi.n):
        return
    assert sum(lattice.mobius(pi, rho) for rho in lattice.coarsenings(pi)) == 0


@settings(max_examples=60, deadline=None)
@given(set_partitions(6))
def test_refinement_and_coarsening_agree(pi):
    for rho in lattice.coarsenings(pi):
        assert lattice.refines(pi, rho)
        assert pi in lattice.refinements(rho)


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=6))
def test_set_partition_sum_matches_enumeration(values):
    def block(vals):
        return Fraction(sum(vals) ** 2 - len(vals), 1 + len(vals))

    brute = Fraction(0)
    for blocks in lattice.partitions_of_items(list(values)):
        term = Fraction(1)
        for b in blocks:
            term *= block(tuple(b))
        brute += term
    assert lattice.set_partition_sum(values, block) == brute


def test_set_partition_sum_counts_bell():
    for n in range(1, 9):
        assert lattice.set_partition_sum([1] * n, lambda vals: 1) == BELL[n]


def test_weight_system_validation():
    w = WeightSystem.from_function(2, ["a", "b"], lambda a, x: a)
    assert w.x((1, 2), "a") == 2
    with pytest.raises(DomainError):
        WeightSystem(2, ["a"], {(1, "a"): 1})
    with pytest.raises(DomainError):
        lattice.doubilet_p(SetPartition.bottom(3), w)


def test_doubilet_single_point():
    pi = SetPartition.from_blocks([[1, 2], [3]])
    w = WeightSystem.from_function(3, [0], lambda a, n: Fraction(a + 2))
    # a one-point domain cannot give two blocks distinct indices
    assert lattice.doubilet_p(pi, w) == 3 * 4 * 5
    assert lattice.doubilet_m(pi, w) == 0


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_doubilet_transitions(seed, n):
    import random

    rng = random.Random(seed)
    w = random_weight_system(rng, n)
    parts = lattice.enumerate_set_partitions(n)
    bottom = SetPartition.bottom(n)
    p = {pi: lattice.doubilet_p(pi, w) for pi in parts}
    for pi in parts:
        assert lattice.doubilet_m(pi, w) == sum(lattice.mobius(pi, r) * p[r]
                                                for r in lattice.coarsenings(pi))
        assert lattice.doubilet_h(pi, w) == sum(abs(lattice.mobius(bottom, r)) * p[r]
                                                for r in lattice.refinements(pi))
        assert lattice.doubilet_e(pi, w) == sum(lattice.mobius(bottom, r) * p[r]
                                                for r in lattice.refinements(pi))
