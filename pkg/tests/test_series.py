from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hopfspecies import series
from hopfspecies.series import PowerSeries


def test_exp_and_log_relations():
    N = 6
    e = series.exp_x(N)
    assert [e[n] for n in range(N + 1)] == [Fraction(1, factorial(n)) for n in range(N + 1)]
    assert series.ps_mul(e, series.ps_exp(-series.variable(N))) == series.constant(1, N)


def test_named_counts():
    assert series.integer_counts(series.sigma_series(7)) == [1, 1, 3, 13, 75, 541, 4683, 47293]
    assert series.integer_counts(series.pi_series(6)) == [1, 1, 2, 5, 15, 52, 203]
    assert series.integer_counts(series.parking_series(5)) == [1, 1, 3, 16, 125, 1296]
    assert series.integer_counts(series.catalan_ogf(6), egf=False) == [1, 1, 2, 5, 14, 42, 132]
    assert series.integer_counts(series.ogf_partition_product(7), egf=False) == [1, 1, 2, 3, 5, 7, 11, 15]
    assert series.integer_counts(series.sigma_ogf(5), egf=False) == [1, 1, 2, 4, 8, 16]


def test_tree_function_is_cayley():
    got = series.integer_counts(series.tree_function(6))
    assert got[1:] == [n ** (n - 1) for n in range(1, 7)]


def test_block_parking_dims():
    assert series.block_parking_dims(5)[1:] == [1, 1, 4, 27, 256]


def test_composition_identity():
    N = 7
    lhs = series.ps_compose(series.ps_geom(series.variable(N)), series.exp_x(N) - 1)
    assert lhs == series.sigma_series(N)


def test_interp_egf_endpoints():
    N = 5
    p, q = series.eplus_dims(N), series.eplus_dims(N)
    # r = 1: nothing is small, so this is the Fubini series
    assert series.integer_counts(series.interp_egf(p, q, 1, N, "T")) == [1, 1, 3, 13, 75, 541]
    # r > N: everything is small, so this is the Bell series
    assert series.integer_counts(series.interp_egf(p, q, N + 1, N, "T")) == [1, 1, 2, 5, 15, 52]
    with pytest.raises(ValueError):
        series.interp_egf(p, q, 2, N, "X")


def test_inverse_requires_unit_constant():
    with pytest.raises((ValueError, ZeroDivisionError)):
        series.ps_inv(series.variable(3))


def test_binomial_convolution():
    ones = [1] * 5
    assert series.binomial_convolution(ones, ones) == [2 ** n for n in range(5)]


small_series = st.lists(st.integers(-4, 4), min_size=5, max_size=5).map(
    lambda cs: PowerSeries(tuple(Fraction(c) for c in cs)))


@given(small_series, small_series, small_series)
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f


@given(small_series)
def test_inverse(f):
    f = PowerSeries((Fraction(1),) + f.coeffs[1:])
    assert series.ps_mul(f, series.ps_inv(f)) == series.constant(1, 4)


def test_egf_counts_are_integral():
    counts = series.integer_counts(series.bij_series(6))
    assert counts == [factorial(n) for n in range(7)]
