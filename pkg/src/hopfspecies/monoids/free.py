"""Positive comonoids and the free Hopf monoids T(p) and S(p) built on them.

A basis element of ``T(p)`` is a tuple of p-structures on the blocks of a
set composition, in order; a basis element of ``S(p)`` is the same tuple
sorted by the minimum label of each block.  With ``p = E₊`` (the structure on
a block is the sorted block itself) these are set compositions and set
partitions; with ``p = cyc`` they are bijections written as sets of cycles.
"""
from __future__ import annotations

import itertools
from typing import Callable, Hashable

from ..core import (
    Accumulator,
    LinComb,
    check_bijection,
    set_compositions,
    set_partitions,
    sorted_labels,
    tensor,
)
from ..hopf import HopfMonoid, HopfMorphism
from .encoding import (
    block_text,
    check_labels,
    decode_block,
    decode_list,
    label_text,
)


class PositiveComonoid:
    """Species with ``p[∅] = 0`` and a coassociative coproduct on nonempty parts."""

    name = "p"

    def basis(self, A) -> list:
        raise NotImplementedError

    def delta(self, S, T, p) -> LinComb:
        raise NotImplementedError

    def relabel(self, p, sigma):
        raise NotImplementedError

    def support(self, p) -> frozenset:
        return frozenset(p)

    def size(self, p) -> int:
        return len(self.support(p))

    def shape(self, p) -> Hashable:
        return len(p)

    def encode(self, p):
        return list(p)

    def decode(self, obj):
        raise NotImplementedError

    def pretty(self, p) -> str:
        raise NotImplementedError


class EPlus(PositiveComonoid):
    """One structure ``∗_A`` per nonempty set, represented by the sorted block."""

    name = "E+"

    def basis(self, A):
        return [sorted_labels(A)] if A else []

    def delta(self, S, T, p):
        if not S or not T:
            raise ValueError("E+ coproduct needs two nonempty parts")
        if frozenset(S) | frozenset(T) != frozenset(p) or frozenset(S) & frozenset(T):
            raise ValueError("decomposition does not match the support")
        return LinComb.basis((sorted_labels(S), sorted_labels(T)))

    def relabel(self, p, sigma):
        check_bijection(sigma, p)
        return sorted_labels(sigma[a] for a in p)

    def decode(self, obj, path="$"):
        return decode_block(obj, path)

    def pretty(self, p):
        return block_text(p)


def rotate_min_first(seq) -> tuple:
    seq = tuple(seq)
    if not seq:
        return seq
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


def restrict_cycle(cycle: tuple, S) -> tuple:
    """The cycle induced on ``S``: each element's successor is its first iterate in ``S``."""
    return rotate_min_first(a for a in cycle if a in S)


class Cyc(PositiveComonoid):
    """Cyclic orders on nonempty sets, stored with the minimal label first."""

    name = "cyc"

    def basis(self, A):
        labels = sorted_labels(A)
        if not labels:
            return []
        first, rest = labels[0], labels[1:]
        return [(first,) + perm for perm in itertools.permutations(rest)]

    def delta(self, S, T, p):
        if not S or not T:
            raise ValueError("cyc coproduct needs two nonempty parts")
        return LinComb.basis((restrict_cycle(p, S), restrict_cycle(p, T)))

    def relabel(self, p, sigma):
        check_bijection(sigma, p)
        return rotate_min_first(sigma[a] for a in p)

    def decode(self, obj, path="$"):
        items = decode_list(obj, path)
        check_labels(items, path)
        if len(set(items)) != len(items) or not items:
            raise ValueError(f"{path}: a cycle needs distinct labels")
        return rotate_min_first(items)

    def pretty(self, p):
        return "(" + label_text(p) + ")"


EPLUS = EPlus()
CYC = Cyc()


def _block_key(comonoid: PositiveComonoid):
    return lambda p: min(comonoid.support(p))


class FreeHopf(HopfMonoid):
    """``T(p)`` (``commutative=False``) or ``S(p)`` (``commutative=True``).

    The product concatenates (resp. unions) the decorated blocks.  The
    coproduct splits each decorated block with the coproduct of ``p``; a block
    lying entirely on one side is passed to that side unsplit.
    """

    def __init__(self, p: PositiveComonoid, commutative: bool, name: str | None = None):
        self.p = p
        self.commutative = commutative
        self.name = name or ("S" if commutative else "T") + f"({p.name})"
        self.unit = ()
        self._key = _block_key(p)
        self._basis: dict = {}

    def canon(self, blocks) -> tuple:
        blocks = tuple(blocks)
        return tuple(sorted(blocks, key=self._key)) if self.commutative else blocks

    def basis(self, I):
        I = frozenset(I)
        cached = self._basis.get(I)
        if cached is not None:
            return cached
        shapes = set_partitions(I) if self.commutative else set_compositions(I)
        out = []
        for F in shapes:
            for deco in itertools.product(*(self.p.basis(A) for A in F)):
                out.append(tuple(deco))
        self._basis[I] = out
        return out

    def support(self, x):
        sup = frozenset()
        for p in x:
            sup |= self.p.support(p)
        return sup

    def blocks(self, x):
        return [self.p.support(p) for p in x]

    def mu(self, x, y):
        return LinComb.basis(self.canon(x + y))

    def delta(self, S, T, x):
        S, T = frozenset(S), frozenset(T)
        p = self.p
        options = []
        for blk in x:
            sup = p.support(blk)
            A, B = sup & S, sup & T
            if not B:
                options.append([((blk,), (), 1)])
            elif not A:
                options.append([((), (blk,), 1)])
            else:
                options.append([((a,), (b,), c) for (a, b), c in p.delta(A, B, blk).items()])
        acc = Accumulator()
        for combo in itertools.product(*options):
            left, right, coeff = (), (), 1
            for l, r, c in combo:
                left += l
                right += r
                coeff *= c
            acc.add_term((self.canon(left), self.canon(right)), coeff)
        return acc.result()

    def relabel(self, x, sigma):
        check_bijection(sigma, self.support(x))
        return self.canon(
            self.p.relabel(blk, {a: sigma[a] for a in self.p.support(blk)}) for blk in x
        )

    def shape(self, x):
        shapes = [self.p.shape(blk) for blk in x]
        return tuple(sorted(shapes, reverse=True)) if self.commutative else tuple(shapes)

    def encode(self, x):
        return [self.p.encode(blk) for blk in x]

    def decode(self, obj, path="$"):
        items = decode_list(obj, path)
        blocks = [self.p.decode(item, f"{path}[{i}]") for i, item in enumerate(items)]
        seen: set = set()
        for i, blk in enumerate(blocks):
            sup = self.p.support(blk)
            if seen & sup:
                raise ValueError(f"{path}[{i}]: blocks must be disjoint")
            seen |= sup
        return self.canon(blocks)

    def pretty(self, x):
        if not x:
            return "1"
        if self.p is EPLUS:
            inner = ",".join(block_text(b) for b in x)
            return "{" + inner + "}" if self.commutative else "(" + inner + ")"
        return "".join(self.p.pretty(b) for b in x)


def tfunctor(p: PositiveComonoid, name: str | None = None) -> FreeHopf:
    return FreeHopf(p, commutative=False, name=name)


def sfunctor(p: PositiveComonoid, name: str | None = None) -> FreeHopf:
    return FreeHopf(p, commutative=True, name=name)


SIGMA = tfunctor(EPLUS, "Sigma")
PI = sfunctor(EPLUS, "Pi")
BIJ = sfunctor(CYC, "bij")


def eplus_delta(S, T, star):
    return EPLUS.delta(S, T, star)


def cyc_delta(S, T, cycle):
    return CYC.delta(S, T, cycle)


def pi_theta(source: FreeHopf, target: FreeHopf,
             theta: Callable[[Hashable], LinComb], name: str = "pi_theta") -> HopfMorphism:
    """Extend a comonoid map ``θ: p -> q`` to ``T(p) -> S(q)`` (or ``S(p) -> S(q)``).

    Each decorated block ``p_A`` goes to ``θ(p_A)``; the blocks are then
    multiplied in the commutative target.
    """
    if not target.commutative:
        raise ValueError("the target of pi_theta must be of the form S(q)")

    def fn(x):
        return tensor(*(theta(blk) for blk in x)).map_keys(target.canon)

    return HopfMorphism(source, target, fn, name)


def _forget_decoration(blk):
    return LinComb.basis(sorted_labels(blk))


ABELIANIZATION = pi_theta(SIGMA, PI, LinComb.basis, "Sigma->Pi")
BIJ_TO_PI = pi_theta(BIJ, PI, _forget_decoration, "bij->Pi")
