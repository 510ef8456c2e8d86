import pytest
from hypothesis import given, settings, strategies as st

from hopfspecies import posets
from hopfspecies.core import LinComb
from hopfspecies.monoids import BIJ

FOUR_CYCLE = (("a", "d", "c", "b"),)

bijections = st.sampled_from(BIJ.basis(frozenset("abcd")))


def test_rank_sizes_of_a_four_cycle():
    assert posets.rank_sizes(FOUR_CYCLE) == [1, 7, 6, 1]


def test_lower_ideal_of_a_cycle_is_a_partition_lattice():
    # Bell numbers
    assert [len(posets.lower_ideal((tuple("abcde"[:d]),))) for d in range(1, 6)] == [1, 2, 5, 15, 52]


def test_order_relation():
    assert posets.leq((("a", "c"), ("b",), ("d",)), FOUR_CYCLE)
    # (adcb) restricted to {a,b} and to {c,d} gives (ab)(cd)
    assert posets.leq((("a", "b"), ("c", "d")), FOUR_CYCLE)
    assert not posets.leq((("a", "c", "d"), ("b",)), FOUR_CYCLE)
    with pytest.raises(ValueError):
        posets.leq((("a",),), FOUR_CYCLE)


def test_mobius_values_by_rank():
    values = posets.mobius_to_top(FOUR_CYCLE)
    by_rank = {}
    for tau, v in values.items():
        by_rank.setdefault(len(tau), set()).add(v)
    assert by_rank == {1: {1}, 2: {-1}, 3: {2}, 4: {-6}}
    assert posets.mobius(posets.bottom("abcd"), FOUR_CYCLE) == -6


def test_mobius_rejects_incomparable():
    with pytest.raises(ValueError):
        posets.mobius((("a", "c", "d"), ("b",)), FOUR_CYCLE)


def test_hasse_edges_are_covers():
    edges = posets.hasse_edges(FOUR_CYCLE)
    # the top is covered by its 7 coatoms
    assert sum(1 for _, s in edges if s == FOUR_CYCLE) == 7
    assert all(len(t) == len(s) + 1 for t, s in edges)


def test_powersum_of_two_transpositions():
    got = posets.powersum((("a", "d"), ("b", "c")))
    assert got == LinComb({
        (("a", "d"), ("b", "c")): 1,
        (("a",), ("b", "c"), ("d",)): -1,
        (("a", "d"), ("b",), ("c",)): -1,
        (("a",), ("b",), ("c",), ("d",)): 1,
    })


@settings(max_examples=30, deadline=None)
@given(bijections)
def test_powersum_round_trip(sigma):
    assert posets.to_powersum(posets.powersum(sigma)) == LinComb.basis(sigma)
    assert posets.powersum_lin(posets.to_powersum(LinComb.basis(sigma))) == LinComb.basis(sigma)


@settings(max_examples=30, deadline=None)
@given(bijections, st.sets(st.sampled_from("abcd")))
def test_powersum_coproduct_is_primitive_like(sigma, S):
    S = frozenset(S)
    T = frozenset("abcd") - S
    assert posets.powersum_coproduct(S, T, sigma) == posets.expected_powersum_coproduct(S, T, sigma)


def test_powersum_product_is_union():
    assert posets.powersum_product((("a", "b"),), (("c",),)) == LinComb.basis((("a", "b"), ("c",)))


@pytest.mark.parametrize("n", range(4))
def test_self_dual(n):
    assert posets.is_self_dual("abc"[:n])
