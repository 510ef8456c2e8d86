from fractions import Fraction
from math import comb

from hypothesis import given, strategies as st

from hopfspecies.core import (
    Accumulator,
    LinComb,
    decompositions,
    rank,
    set_compositions,
    set_partitions,
    standardization,
    subsets,
    tensor,
    tensor_map,
)

keys = st.sampled_from(["x", "y", "z", "w"])
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
combos = st.dictionaries(keys, coeffs, max_size=4).map(LinComb)
scalars = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@given(combos, combos, combos)
def test_addition_is_associative_and_commutative(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a


@given(combos, scalars, scalars)
def test_scalar_action(a, s, t):
    assert (s + t) * a == s * a + t * a
    assert s * (t * a) == (s * t) * a
    assert 0 * a == LinComb.zero()


@given(combos)
def test_additive_inverse_and_no_stored_zeros(a):
    assert a - a == LinComb.zero()
    assert not (a + (-a))
    assert all(c != 0 for c in (a + a).values())


def test_coefficients_are_reduced_fractions():
    x = LinComb([("x", Fraction(2, 4)), ("x", Fraction(1, 4))])
    assert x["x"] == Fraction(3, 4)
    assert x.coeff("missing") == 0


def test_cancellation_drops_key():
    x = LinComb([("x", 1), ("y", 2), ("x", -1)])
    assert dict(x) == {"y": 2}


def test_accumulator_matches_sum():
    acc = Accumulator()
    acc.add(LinComb({"a": 1, "b": 2}))
    acc.add(LinComb({"a": -1}), 1)
    acc.add_term("c", Fraction(1, 3))
    assert acc.result() == LinComb({"b": 2, "c": Fraction(1, 3)})


def test_tensor_and_tensor_map():
    t = tensor(LinComb({"a": 2}), LinComb({"b": 1, "c": -1}))
    assert t == LinComb({("a", "b"): 2, ("a", "c"): -2})
    doubled = tensor_map(t, lambda k: LinComb({k: 1}), lambda k: LinComb({k: 3}))
    assert doubled == 3 * t


@given(st.integers(min_value=0, max_value=5), st.integers(min_value=1, max_value=3))
def test_decompositions_count(n, k):
    I = range(n)
    ds = decompositions(I, k)
    assert len(ds) == k ** n
    for parts in ds:
        assert frozenset().union(*parts) == frozenset(I)
        assert sum(len(p) for p in parts) == n


def test_subsets_count():
    assert sum(1 for _ in subsets("abcd")) == 16


def test_partitions_and_compositions_counts():
    assert [len(set_partitions(range(n))) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    assert [len(set_compositions(range(n))) for n in range(6)] == [1, 1, 3, 13, 75, 541]
    # ordered pairs of a 3-set into 2 blocks: 3 * 2 choices
    two_blocks = [F for F in set_compositions("abc") if len(F) == 2]
    assert len(two_blocks) == 2 * comb(3, 1)


def test_standardization_is_order_preserving():
    assert standardization([10, 3, 7]) == {3: 1, 7: 2, 10: 3}


def test_rank_detects_dependence():
    a, b = LinComb({"x": 1}), LinComb({"y": 1})
    assert rank([a, b, a + b]) == 2
    assert rank([a, 2 * a]) == 1
    assert rank([]) == 0
