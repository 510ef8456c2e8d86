"""Parking functions as weak set compositions, parkization, and the Hopf monoid PF.

A weak composition is a tuple of sorted (possibly empty) blocks.  It is a
parking function when its length equals its size and every prefix of ``k``
blocks holds at least ``k`` labels.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..core import LinComb, check_bijection, sorted_labels
from ..hopf import HopfMonoid, HopfMorphism
from .encoding import EncodingError, block_text, decode_block, decode_list, label_text
from .free import PI

WeakComposition = tuple
ParkingFunction = tuple


def size(gamma) -> int:
    return sum(len(b) for b in gamma)


def is_parking(gamma) -> bool:
    if len(gamma) != size(gamma):
        return False
    total = 0
    for k, blk in enumerate(gamma, 1):
        total += len(blk)
        if total < k:
            return False
    return True


def park(gamma) -> tuple:
    """Keep each block iff it does not break the parking condition so far.

    Marching left to right, block ``B`` is appended to the output ``Φ`` when
    ``|Φ| + |B| >= ℓ(Φ) + 1`` and discarded otherwise.  Defined on every weak
    composition; the result need not be a parking function in general.
    """
    out = []
    total = 0
    for blk in gamma:
        if total + len(blk) >= len(out) + 1:
            out.append(blk)
            total += len(blk)
    return tuple(out)


@dataclass(frozen=True)
class ParkStep:
    phi: tuple
    remaining: tuple
    kept: bool | None  # None on the final row


def park_trace(gamma) -> list[ParkStep]:
    """One row per examined block plus a final row, mirroring ``park``."""
    rows = []
    out: list = []
    total = 0
    rest = tuple(gamma)
    while rest:
        blk = rest[0]
        keep = total + len(blk) >= len(out) + 1
        rows.append(ParkStep(tuple(out), rest, keep))
        if keep:
            out.append(blk)
            total += len(blk)
        rest = rest[1:]
    rows.append(ParkStep(tuple(out), (), None))
    return rows


def _wc_text(gamma) -> str:
    return "(" + ",".join(label_text(b) if b else "∅" for b in gamma) + ")"


def format_trace(rows: list[ParkStep]) -> list[str]:
    lines = []
    for row in rows:
        phi = _wc_text(row.phi)
        if row.kept is None:
            lines.append(f"Φ = {phi}    Γ̇ = ()")
            continue
        head = label_text(row.remaining[0]) if row.remaining[0] else "∅"
        mark = "✓" if row.kept else "✗"
        lines.append(f"Φ = {phi}, {head} ? {mark}    Γ̇ = {_wc_text(row.remaining)}")
    return lines


def intersect(gamma, S) -> tuple:
    """Blockwise intersection ``Γ_{∩S}``; keeps the original length."""
    S = frozenset(S)
    return tuple(tuple(a for a in blk if a in S) for blk in gamma)


def pf_blocks(phi) -> list[tuple]:
    """Split a parking function into block parking functions."""
    out, start, total = [], 0, 0
    for k, blk in enumerate(phi, 1):
        total += len(blk)
        if total == k:
            out.append(tuple(phi[start:k]))
            start = k
    if start != len(phi):
        raise ValueError("not a parking function")
    return out


def is_block_parking(phi) -> bool:
    return is_parking(phi) and len(pf_blocks(phi)) == 1


def size_sequences(n: int):
    """Block-size sequences of parking functions of length ``n``."""
    def rec(prefix, total):
        k = len(prefix)
        if k == n:
            if total == n:
                yield tuple(prefix)
            return
        for c in range(0, n - total + 1):
            if total + c >= k + 1:
                prefix.append(c)
                yield from rec(prefix, total + c)
                prefix.pop()
    yield from rec([], 0)


def parking_functions(I) -> list[tuple]:
    labels = sorted_labels(I)
    n = len(labels)
    out = []
    for sizes in size_sequences(n):
        def fill(i, remaining, acc):
            if i == n:
                out.append(tuple(acc))
                return
            for blk in itertools.combinations(remaining, sizes[i]):
                rest = [a for a in remaining if a not in blk]
                acc.append(blk)
                fill(i + 1, rest, acc)
                acc.pop()
        fill(0, labels, [])
    return out


def decode_weak_composition(obj, path="$") -> tuple:
    items = decode_list(obj, path)
    blocks = [decode_block(b, f"{path}[{i}]", allow_empty=True) for i, b in enumerate(items)]
    seen: set = set()
    for i, blk in enumerate(blocks):
        if seen & set(blk):
            raise EncodingError(f"{path}[{i}]: blocks must be disjoint")
        seen |= set(blk)
    return tuple(blocks)


class ParkingHopf(HopfMonoid):
    """Product: concatenation.  Coproduct: ``park(Φ_{∩S}) ⊗ park(Φ_{∩T})``."""

    name = "PF"
    unit = ()

    def __init__(self):
        self._basis: dict = {}

    def basis(self, I):
        I = frozenset(I)
        if I not in self._basis:
            self._basis[I] = parking_functions(I)
        return self._basis[I]

    def support(self, x):
        return frozenset(a for blk in x for a in blk)

    def mu(self, x, y):
        return LinComb.basis(x + y)

    def delta(self, S, T, x):
        return LinComb.basis((park(intersect(x, S)), park(intersect(x, T))))

    def relabel(self, x, sigma):
        check_bijection(sigma, self.support(x))
        return tuple(sorted_labels(sigma[a] for a in blk) for blk in x)

    def shape(self, x):
        return tuple(len(b) for b in x)

    def encode(self, x):
        return [list(b) for b in x]

    def decode(self, obj, path="$"):
        gamma = decode_weak_composition(obj, path)
        if not is_parking(gamma):
            raise EncodingError(f"{path}: not a parking function (prefix condition fails)")
        return gamma

    def pretty(self, x):
        return "(" + ",".join(block_text(b) for b in x) + ")" if x else "1"


PF = ParkingHopf()


def pi_pf(phi) -> tuple:
    """The set partition of nonempty blocks."""
    return PI.canon(b for b in phi if b)


PF_TO_PI = HopfMorphism(PF, PI, lambda x: LinComb.basis(pi_pf(x)), "PF->Pi")
