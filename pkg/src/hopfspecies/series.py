"""Truncated power series with exact rational coefficients.

Every series carries an explicit truncation order ``N`` (coefficients
``c_0..c_N``); binary operations require equal orders.  These serve as
independent oracles for the dimension counts produced by enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a power series needs at least the constant term")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __add__(self, other):
        return ps_add(self, _lift(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return ps_add(self, ps_scale(_lift(other, self.order), -1))

    def __rsub__(self, other):
        return ps_add(_lift(other, self.order), ps_scale(self, -1))

    def __neg__(self):
        return ps_scale(self, -1)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        return ps_scale(self, other)

    __rmul__ = __mul__

    def egf_counts(self) -> list[Fraction]:
        """``n! c_n``: the dimension sequence when this is an EGF."""
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]


def _lift(x, N: int) -> PowerSeries:
    if isinstance(x, PowerSeries):
        return x
    return constant(x, N)


def _check_orders(*fs: PowerSeries) -> int:
    orders = {f.order for f in fs}
    if len(orders) != 1:
        raise ValueError(f"truncation orders differ: {sorted(orders)}")
    return orders.pop()


def constant(c, N: int) -> PowerSeries:
    return PowerSeries((c,) + (0,) * N)


def variable(N: int) -> PowerSeries:
    """The series ``x``."""
    return PowerSeries(tuple(1 if n == 1 else 0 for n in range(N + 1)))


def from_egf_counts(counts: Sequence, N: int) -> PowerSeries:
    """``Σ a_n xⁿ/n!``; missing counts are zero."""
    return PowerSeries(tuple(Fraction(counts[n], factorial(n)) if n < len(counts) else 0
                             for n in range(N + 1)))


def ps_add(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    _check_orders(f, g)
    return PowerSeries(tuple(a + b for a, b in zip(f.coeffs, g.coeffs)))


def ps_scale(f: PowerSeries, c) -> PowerSeries:
    c = Fraction(c)
    return PowerSeries(tuple(c * a for a in f.coeffs))


def ps_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    N = _check_orders(f, g)
    a, b = f.coeffs, g.coeffs
    return PowerSeries(tuple(sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(N + 1)))


def _require_no_constant(f: PowerSeries, what: str) -> None:
    if f[0] != 0:
        raise ValueError(f"{what} needs a series with zero constant term")


def ps_inv(f: PowerSeries) -> PowerSeries:
    """Multiplicative inverse; needs ``c_0 ≠ 0``."""
    if f[0] == 0:
        raise ValueError("inverse needs a nonzero constant term")
    a = f.coeffs
    out = [1 / a[0]]
    for n in range(1, f.order + 1):
        out.append(-sum(a[i] * out[n - i] for i in range(1, n + 1)) / a[0])
    return PowerSeries(tuple(out))


def ps_geom(f: PowerSeries) -> PowerSeries:
    """``1/(1 - f)`` for ``f`` without constant term."""
    _require_no_constant(f, "geom")
    return ps_inv(constant(1, f.order) - f)


def ps_exp(f: PowerSeries) -> PowerSeries:
    """``exp(f)`` via ``E' = f' E``; needs ``c_0 = 0``."""
    _require_no_constant(f, "exp")
    a = f.coeffs
    e = [Fraction(1)]
    for n in range(1, f.order + 1):
        e.append(sum(k * a[k] * e[n - k] for k in range(1, n + 1)) / n)
    return PowerSeries(tuple(e))


def ps_compose(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """``f(g(x))``; the inner series must have zero constant term."""
    N = _check_orders(f, g)
    _require_no_constant(g, "compose")
    out = constant(0, N)
    power = constant(1, N)
    for c in f.coeffs:
        out = out + power * c
        power = power * g
    return out


def fixed_point(F: Callable[[PowerSeries], PowerSeries], N: int) -> PowerSeries:
    """Solve ``y = F(y)`` where each iteration fixes one more coefficient."""
    y = constant(0, N)
    for _ in range(N + 2):
        y = F(y)
    return y


def exp_x(N: int) -> PowerSeries:
    return from_egf_counts([1] * (N + 1), N)


def tree_function(N: int) -> PowerSeries:
    """Rooted labeled trees, ``T = x·e^T``; coefficients ``n^{n-1}/n!``."""
    x = variable(N)
    return fixed_point(lambda T: x * ps_exp(T), N)


def planar_tree_series(N: int) -> PowerSeries:
    """Labeled planar rooted trees, ``A = x/(1 - A)``."""
    x = variable(N)
    return fixed_point(lambda A: x * ps_geom(A), N)


def catalan_ogf(N: int) -> PowerSeries:
    x = variable(N)
    return fixed_point(lambda C: constant(1, N) + x * C * C, N)


def ogf_partition_product(N: int) -> PowerSeries:
    """``Π_{k=1}^{N} 1/(1 - x^k)`` truncated at order ``N``."""
    out = constant(1, N)
    for k in range(1, N + 1):
        xk = PowerSeries(tuple(1 if n == k else 0 for n in range(N + 1)))
        out = out * ps_geom(xk)
    return out


def positive_part(dims: Sequence, N: int, lo: int = 1, hi: int | None = None) -> PowerSeries:
    """``Σ_{lo ≤ k ≤ hi} dims[k] x^k/k!`` (``dims[0]`` ignored)."""
    hi = N if hi is None else min(hi, N)
    return PowerSeries(tuple(Fraction(dims[k], factorial(k)) if lo <= k <= hi and k >= 1 else 0
                             for k in range(N + 1)))


def interp_egf(p_dims: Sequence, q_dims: Sequence, r: int, N: int,
               flavor: str = "T") -> PowerSeries:
    """EGF of the level-``r`` interpolating family.

    ``T`` flavor: ``1/(1 - p_{≥r}(x)) · exp(q_{<r}(x))``;
    ``S`` flavor: ``exp(p_{≥r}(x)) · exp(q_{<r}(x))``.
    ``p_dims[k]``, ``q_dims[k]`` are the dimensions of the positive
    generating species in size ``k``.
    """
    if r < 1:
        raise ValueError("level r must be at least 1")
    if flavor not in ("T", "S"):
        raise ValueError("flavor must be 'T' or 'S'")
    large = positive_part(p_dims, N, lo=r)
    small = positive_part(q_dims, N, lo=1, hi=r - 1)
    head = ps_geom(large) if flavor == "T" else ps_exp(large)
    return head * ps_exp(small)


# dimension sequences of the generating species, indexed from 0

def eplus_dims(N: int) -> list[int]:
    return [0] + [1] * N


def cyc_dims(N: int) -> list[int]:
    return [0] + [factorial(k - 1) for k in range(1, N + 1)]


def planar_tree_dims(N: int) -> list[int]:
    return [int(c) for c in planar_tree_series(N).egf_counts()]


def rooted_tree_dims(N: int) -> list[int]:
    return [int(c) for c in tree_function(N).egf_counts()]


def parking_series(N: int) -> PowerSeries:
    """Parking functions have the rooted-forest EGF ``e^{T(x)}``."""
    return ps_exp(tree_function(N))


def block_parking_dims(N: int) -> list[int]:
    """From ``PF = 1/(1 - B)``: ``B = 1 - 1/PF``."""
    B = constant(1, N) - ps_inv(parking_series(N))
    return [int(c) for c in B.egf_counts()]


def sigma_series(N: int) -> PowerSeries:
    """``1/(2 - e^x)``."""
    return ps_inv(constant(2, N) - exp_x(N))


def pi_series(N: int) -> PowerSeries:
    """``e^{e^x - 1}``."""
    return ps_exp(exp_x(N) - 1)


def bij_series(N: int) -> PowerSeries:
    """``1/(1 - x)``."""
    return ps_geom(variable(N))


def sigma_ogf(N: int) -> PowerSeries:
    """``(1 - x)/(1 - 2x)``."""
    x = variable(N)
    return (constant(1, N) - x) * ps_geom(x * 2)


def eplus_ogf(N: int) -> PowerSeries:
    x = variable(N)
    return x * ps_geom(x)


def integer_counts(f: PowerSeries, egf: bool = True) -> list[int]:
    vals = f.egf_counts() if egf else list(f.coeffs)
    out = []
    for v in vals:
        if v.denominator != 1:
            raise ValueError(f"non-integral count {v}")
        out.append(int(v))
    return out


def binomial_convolution(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Dimensions of a Cauchy product from those of its factors."""
    n = min(len(a), len(b))
    return [sum(comb(m, k) * a[k] * b[m - k] for k in range(m + 1)) for m in range(n)]
