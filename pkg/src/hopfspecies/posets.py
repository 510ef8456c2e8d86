"""The restriction order on bijections, its Möbius function and the powersum basis.

``τ ≤ σ`` when ``τ`` is obtained from ``σ`` by splitting cycles with the
restriction coproduct of ``cyc``.  Equivalently, every cycle of ``τ`` lies
inside a cycle ``γ`` of ``σ`` and equals ``γ`` restricted to its support.
The lower ideal of one ``d``-cycle is therefore a copy of the lattice of set
partitions of ``d`` labels.
"""
from __future__ import annotations

import itertools
from functools import lru_cache

from .core import Accumulator, LinComb, decompositions, set_partitions, sorted_labels, tensor
from .hopf import StructureConstants, delta_lin, mu_lin
from .monoids.free import BIJ, restrict_cycle


def support(sigma) -> frozenset:
    return BIJ.support(sigma)


def restrict_bijection(sigma, S) -> tuple:
    """``σ|_S``: each cycle restricted to ``S``, empty ones dropped."""
    S = frozenset(S)
    return BIJ.canon(restrict_cycle(c, S) for c in sigma if S & frozenset(c))


def bottom(labels) -> tuple:
    """All fixed points."""
    return tuple((a,) for a in sorted_labels(labels))


def _same_support(tau, sigma) -> None:
    if support(tau) != support(sigma):
        raise ValueError("bijections live on different label sets")


def leq(tau, sigma) -> bool:
    _same_support(tau, sigma)
    home = {a: c for c in sigma for a in c}
    for c in tau:
        gamma = home[c[0]]
        if not set(c) <= set(gamma) or restrict_cycle(gamma, c) != c:
            return False
    return True


def covers(tau, sigma) -> bool:
    """True iff ``tau`` comes from ``sigma`` by splitting exactly one cycle in two."""
    return len(tau) == len(sigma) + 1 and leq(tau, sigma)


@lru_cache(maxsize=None)
def lower_ideal(sigma) -> tuple:
    """All ``τ ≤ σ``, top first, ordered by number of cycles."""
    per_cycle = []
    for gamma in sigma:
        per_cycle.append([tuple(restrict_cycle(gamma, blk) for blk in X)
                          for X in set_partitions(gamma)])
    out = [BIJ.canon(itertools.chain.from_iterable(parts))
           for parts in itertools.product(*per_cycle)]
    return tuple(sorted(out, key=lambda t: (len(t), t)))


def rank_sizes(sigma) -> list[int]:
    """Number of elements of the lower ideal at each level, starting from ``σ``."""
    n = len(support(sigma))
    counts = [0] * (n - len(sigma) + 1)
    for t in lower_ideal(sigma):
        counts[len(t) - len(sigma)] += 1
    return counts


@lru_cache(maxsize=None)
def mobius_to_top(sigma) -> dict:
    """``{τ: μ(τ, σ)}`` over the lower ideal, computed downward from ``σ``."""
    ideal = lower_ideal(sigma)
    mu: dict = {}
    for t in ideal:
        if t == sigma:
            mu[t] = 1
            continue
        mu[t] = -sum(v for rho, v in mu.items() if len(rho) < len(t) and leq(t, rho))
    return mu


def mobius(tau, sigma) -> int:
    _same_support(tau, sigma)
    if not leq(tau, sigma):
        raise ValueError("mobius needs comparable bijections (tau <= sigma)")
    return mobius_to_top(sigma)[tau]


def hasse_edges(sigma) -> list[tuple]:
    ideal = lower_ideal(sigma)
    return [(t, s) for s in ideal for t in ideal if covers(t, s)]


def powersum(sigma) -> LinComb:
    """``p_σ = Σ_{τ ≤ σ} μ(τ, σ) τ``."""
    return LinComb(mobius_to_top(sigma).items())


def powersum_lin(x: LinComb) -> LinComb:
    """Expand a combination of powersum indices in the bijection basis."""
    return x.map(powersum)


def to_powersum(x: LinComb) -> LinComb:
    """Coordinates in the powersum basis, via ``σ = Σ_{τ ≤ σ} p_τ``."""
    return x.map(lambda s: LinComb((t, 1) for t in lower_ideal(s)))


def powersum_product(a, b) -> LinComb:
    """``μ(p_a ⊗ p_b)`` in powersum coordinates."""
    return to_powersum(mu_lin(BIJ, powersum(a), powersum(b)))


def powersum_coproduct(S, T, sigma) -> LinComb:
    """``Δ_{S,T}(p_σ)`` in powersum coordinates on both legs."""
    raw = delta_lin(BIJ, S, T, powersum(sigma))
    acc = Accumulator()
    for (x, y), c in raw.items():
        acc.add(tensor(to_powersum(LinComb.basis(x)), to_powersum(LinComb.basis(y))), c)
    return acc.result()


def expected_powersum_coproduct(S, T, sigma) -> LinComb:
    """``p_{σ|S} ⊗ p_{σ|T}`` when every cycle lies in ``S`` or ``T``, else 0."""
    S, T = frozenset(S), frozenset(T)
    if all(frozenset(c) <= S or frozenset(c) <= T for c in sigma):
        return LinComb.basis((restrict_bijection(sigma, S), restrict_bijection(sigma, T)))
    return LinComb.zero()


def powersum_structure_constants(I) -> StructureConstants:
    """Product and coproduct constants of bij on ``I`` in the powersum basis."""
    I = frozenset(I)
    prod, cop = {}, {}
    for S, T in decompositions(I, 2):
        for a in BIJ.basis(S):
            for b in BIJ.basis(T):
                for z, c in powersum_product(a, b).items():
                    prod[(a, b, z)] = c
        for z in BIJ.basis(I):
            for (x, y), c in powersum_coproduct(S, T, z).items():
                cop[(z, x, y)] = c
    return StructureConstants(sorted_labels(I), prod, cop)


def is_self_dual(I) -> bool:
    """Coproduct constants equal the transposed product constants."""
    sc = powersum_structure_constants(I)
    return sc.coproduct == sc.dual().coproduct
