import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hopfspecies.core import LinComb
from hopfspecies.hopf import (
    DualHopf,
    antipode,
    cauchy_product_hopf,
    check_counit,
    check_hopf,
    check_morphism,
    check_naturality,
    counit,
    graded_dual,
    structure_constants,
)
from hopfspecies.monoids import MONOIDS, MORPHISMS, PI, SIGMA

SMALL = [frozenset("abc"[:n]) for n in range(4)]


@pytest.mark.parametrize("name", sorted(MONOIDS))
def test_axioms_small(name):
    H = MONOIDS[name]
    for I in SMALL:
        for rep in check_hopf(H, I) + [check_counit(H, I), check_naturality(H, I)]:
            assert rep.ok, rep.line()


@pytest.mark.parametrize("name", sorted(MORPHISMS))
def test_morphisms_small(name):
    for I in SMALL:
        assert check_morphism(MORPHISMS[name], I).ok


@pytest.mark.parametrize("name", sorted(MONOIDS))
def test_unit_and_trivial_coproducts(name):
    H = MONOIDS[name]
    assert H.basis(frozenset()) == [H.unit]
    for x in H.basis(frozenset("ab")):
        I = H.support(x)
        assert H.delta(frozenset(), I, x) == LinComb.basis((H.unit, x))
        assert H.delta(I, frozenset(), x) == LinComb.basis((x, H.unit))
        assert counit(x, H) == 0


def test_sigma_antipode_of_two_singletons_is_reversal():
    x = (("a",), ("b",))
    assert antipode(SIGMA, x) == LinComb.basis((("b",), ("a",)))


def test_sigma_antipode_of_one_block():
    x = (("a", "b"),)
    want = LinComb({(("a", "b"),): -1, (("a",), ("b",)): 1, (("b",), ("a",)): 1})
    assert antipode(SIGMA, x) == want


def test_pi_antipode_counts_ordered_set_partitions():
    # S(ab) = -{ab} + 2{a}{b} in the commutative case
    x = (("a", "b"),)
    assert antipode(PI, x) == LinComb({(("a", "b"),): -1, (("a",), ("b",)): 2})


def test_cauchy_product_is_hopf():
    H = cauchy_product_hopf(PI, PI)
    for I in SMALL[:3]:
        assert all(r.ok for r in check_hopf(H, I))


def test_dual_is_hopf_and_double_dual_constants_match():
    D = DualHopf(SIGMA)
    for I in SMALL[:3]:
        assert all(r.ok for r in check_hopf(D, I))
    sc = structure_constants(SIGMA, "ab")
    assert sc.dual().dual().product == sc.product


def test_graded_dual_shape():
    sc = graded_dual(PI, 2)
    assert sc.labels == (1, 2)
    assert sc.product


perms = st.permutations(["a", "b", "c"])


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(MONOIDS)), st.data(), perms, perms)
def test_relabel_is_functorial(name, data, p1, p2):
    H = MONOIDS[name]
    x = data.draw(st.sampled_from(H.basis(frozenset("abc"))))
    s = dict(zip("abc", p1))
    t = dict(zip("abc", p2))
    composite = {a: t[s[a]] for a in "abc"}
    assert H.relabel(H.relabel(x, s), t) == H.relabel(x, composite)
    assert H.relabel(x, {a: a for a in "abc"}) == x


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(MONOIDS)), st.data())
def test_encoding_round_trip(name, data):
    H = MONOIDS[name]
    x = data.draw(st.sampled_from(H.basis(frozenset("abc"))))
    assert H.decode(H.encode(x)) == x


def test_shape_separates_orbits():
    for H in MONOIDS.values():
        groups = {}
        for x in H.basis(frozenset("abc")):
            groups.setdefault(H.shape(x), set()).add(x)
        for members in groups.values():
            x = next(iter(members))
            orbit = {H.relabel(x, dict(zip("abc", p))) for p in itertools.permutations("abc")}
            assert members == orbit
