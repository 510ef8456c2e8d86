"""Label sets, decompositions, exact scalars and sparse linear combinations.

Every structure in the package is an immutable, hashable value built from
tuples, so it can serve directly as a key of a :class:`LinComb`.  Sets of
labels are ``frozenset`` objects; whenever an order is needed we sort, so
labels of one structure must be mutually comparable (all ``str`` or all
``int``).
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Sequence

Scalar = Fraction
LabelSet = frozenset


def labelset(labels: Iterable = ()) -> frozenset:
    return frozenset(labels)


def sorted_labels(labels: Iterable) -> tuple:
    return tuple(sorted(labels))


def decompositions(I: Iterable, k: int = 2) -> list[tuple[frozenset, ...]]:
    """All ordered decompositions of ``I`` into ``k`` (possibly empty) parts.

    Order is lexicographic in the membership vector of the sorted labels, so
    for ``k=2`` the first entry is ``(I, {})`` and the last ``({}, I)``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    labels = sorted_labels(I)
    out = []
    for vec in itertools.product(range(k), repeat=len(labels)):
        parts = [[] for _ in range(k)]
        for lab, j in zip(labels, vec):
            parts[j].append(lab)
        out.append(tuple(frozenset(p) for p in parts))
    return out


def subsets(I: Iterable) -> Iterator[frozenset]:
    labels = sorted_labels(I)
    for k in range(len(labels) + 1):
        for combo in itertools.combinations(labels, k):
            yield frozenset(combo)


def set_partitions(I: Iterable) -> list[tuple[tuple, ...]]:
    """Set partitions of ``I`` as tuples of sorted blocks, ordered by minimum."""
    labels = sorted_labels(I)
    if not labels:
        return [()]
    first, rest = labels[0], labels[1:]
    out = []
    for k in range(len(rest) + 1):
        for mates in itertools.combinations(rest, k):
            block = (first,) + mates
            remaining = [x for x in rest if x not in mates]
            for tail in set_partitions(remaining):
                out.append((block,) + tail)
    return out


def set_compositions(I: Iterable) -> list[tuple[tuple, ...]]:
    """Ordered set partitions of ``I``; blocks are sorted tuples."""
    labels = sorted_labels(I)
    if not labels:
        return [()]
    out = []
    for block in subsets(labels):
        if not block:
            continue
        remaining = [x for x in labels if x not in block]
        for tail in set_compositions(remaining):
            out.append((sorted_labels(block),) + tail)
    return out


def check_bijection(sigma: Mapping, domain: Iterable) -> None:
    """Raise ``ValueError`` unless ``sigma`` is a bijection with domain ``domain``."""
    domain = frozenset(domain)
    if frozenset(sigma) != domain:
        raise ValueError(
            f"relabeling domain {sorted_labels(sigma)} does not match support "
            f"{sorted_labels(domain)}"
        )
    if len(set(sigma.values())) != len(domain):
        raise ValueError("relabeling is not injective")


def standardization(S: Iterable) -> dict:
    """The order-preserving bijection ``S -> {1..|S|}``."""
    return {lab: i + 1 for i, lab in enumerate(sorted_labels(S))}


def shift_map(S: Iterable, offset: int) -> dict:
    return {lab: lab + offset for lab in S}


def canonical_set(n: int) -> frozenset:
    return frozenset(range(1, n + 1))


class LinComb(Mapping):
    """A finitely supported map from basis structures to exact rationals.

    Zero coefficients are never stored, so two combinations are equal exactly
    when their dictionaries are.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable | None = None):
        d: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                c = Fraction(c)
                if c:
                    c = d.get(key, 0) + c
                    if c:
                        d[key] = c
                    else:
                        d.pop(key, None)
        self._terms = d
        self._hash = None

    @classmethod
    def _raw(cls, d: dict) -> "LinComb":
        obj = cls.__new__(cls)
        obj._terms = d
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, key: Hashable, coeff=1) -> "LinComb":
        return cls({key: coeff})

    @classmethod
    def zero(cls) -> "LinComb":
        return cls._raw({})

    def __getitem__(self, key):
        return self._terms[key]

    def coeff(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if isinstance(other, int) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "LinComb") -> "LinComb":
        return lincomb_combine(self, other, 1)

    def __sub__(self, other: "LinComb") -> "LinComb":
        return lincomb_combine(self, other, -1)

    def __neg__(self) -> "LinComb":
        return LinComb._raw({k: -c for k, c in self._terms.items()})

    def __mul__(self, c) -> "LinComb":
        c = Fraction(c)
        if not c:
            return LinComb.zero()
        return LinComb._raw({k: c * v for k, v in self._terms.items()})

    __rmul__ = __mul__

    def sorted_items(self) -> list:
        try:
            return sorted(self._terms.items(), key=lambda kv: kv[0])
        except TypeError:
            return sorted(self._terms.items(), key=lambda kv: repr(kv[0]))

    def map(self, f: Callable[[Hashable], "LinComb"]) -> "LinComb":
        """Linear extension of ``f`` (basis element -> LinComb)."""
        acc = Accumulator()
        for k, c in self._terms.items():
            acc.add(f(k), c)
        return acc.result()

    def map_keys(self, f: Callable[[Hashable], Hashable]) -> "LinComb":
        """Linear extension of a set map on basis elements."""
        acc: dict = {}
        for k, c in self._terms.items():
            k2 = f(k)
            v = acc.get(k2, 0) + c
            if v:
                acc[k2] = v
            else:
                acc.pop(k2, None)
        return LinComb._raw(acc)

    def __repr__(self):
        if not self._terms:
            return "LinComb(0)"
        body = " + ".join(f"{c}*{k!r}" for k, c in self.sorted_items())
        return f"LinComb({body})"


class Accumulator:
    """Mutable sum of linear combinations; ``result()`` freezes it."""

    __slots__ = ("_d",)

    def __init__(self):
        self._d: dict = {}

    def add(self, x: Mapping, c=1):
        d = self._d
        if c == 1:
            for k, v in x.items():
                v = d.get(k, 0) + v
                if v:
                    d[k] = v
                else:
                    d.pop(k, None)
        else:
            for k, v in x.items():
                v = d.get(k, 0) + c * v
                if v:
                    d[k] = v
                else:
                    d.pop(k, None)

    def add_term(self, key, c):
        v = self._d.get(key, 0) + c
        if v:
            self._d[key] = v
        else:
            self._d.pop(key, None)

    def result(self) -> LinComb:
        return LinComb._raw({k: Fraction(v) for k, v in self._d.items()})


def lincomb_combine(x: LinComb, y: LinComb, c=1) -> LinComb:
    """Return ``x + c*y`` with zero coefficients dropped."""
    acc = Accumulator()
    acc.add(x)
    acc.add(y, Fraction(c))
    return acc.result()


def tensor(*factors: LinComb) -> LinComb:
    """Tensor product; keys of the result are tuples of factor keys."""
    result = {(): Fraction(1)}
    for f in factors:
        nxt = {}
        for k, c in result.items():
            for k2, c2 in f.items():
                nxt[k + (k2,)] = c * c2
        result = nxt
    return LinComb._raw(result)


def tensor_map(x: LinComb, *fs: Callable) -> LinComb:
    """Apply ``f1 ⊗ f2 ⊗ ...`` to a tensor ``x`` (keys are tuples)."""
    acc = Accumulator()
    for key, c in x.items():
        acc.add(tensor(*(f(k) for f, k in zip(fs, key))), c)
    return acc.result()


def rank(vectors: Sequence[LinComb]) -> int:
    """Exact rank of a family of linear combinations (sparse elimination)."""
    pivots: dict = {}
    r = 0
    for v in vectors:
        row = dict(v.items())
        while row:
            lead = min(row, key=repr)
            if lead in pivots:
                prow = pivots[lead]
                c = row[lead] / prow[lead]
                for k, val in prow.items():
                    nv = row.get(k, 0) - c * val
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            else:
                pivots[lead] = row
                r += 1
                break
    return r
