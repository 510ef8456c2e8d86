"""Rooted forests, planar and non-planar.

A tree is ``(root, children)`` with ``children`` a tuple of trees; a forest is
a tuple of trees.  In a non-planar forest children and trees are sorted by
root label, which is a canonical form because labels are distinct.
"""
from __future__ import annotations

import itertools

from ..core import LinComb, check_bijection, sorted_labels
from ..hopf import HopfMonoid, HopfMorphism
from .encoding import EncodingError, check_labels, decode_list


def tree_labels(tree):
    root, children = tree
    yield root
    for c in children:
        yield from tree_labels(c)


def forest_labels(forest) -> frozenset:
    return frozenset(a for t in forest for a in tree_labels(t))


def canon_tree(tree):
    root, children = tree
    return (root, tuple(sorted((canon_tree(c) for c in children), key=lambda t: t[0])))


def canon_forest(forest) -> tuple:
    return tuple(sorted((canon_tree(t) for t in forest), key=lambda t: t[0]))


def ancestors(forest) -> dict:
    """Map each node to the set of its proper ancestors."""
    out: dict = {}

    def walk(tree, above):
        root, children = tree
        out[root] = above
        for c in children:
            walk(c, above | {root})

    for t in forest:
        walk(t, frozenset())
    return out


def is_admissible(forest, S) -> bool:
    """True when ``S`` contains every ancestor of each of its nodes."""
    S = frozenset(S)
    anc = ancestors(forest)
    return all(anc[a] <= S for a in S)


def admissible_subsets(forest) -> list[frozenset]:
    """Ancestor-closed node subsets, built as order ideals tree by tree."""
    def tree_ideals(tree):
        root, children = tree
        out = [frozenset()]
        for combo in itertools.product(*(tree_ideals(c) for c in children)):
            out.append(frozenset({root}).union(*combo))
        return out

    result = [frozenset()]
    for t in forest:
        result = [a | b for a in result for b in tree_ideals(t)]
    return result


def restrict_tree(tree, U) -> list:
    root, children = tree
    below = [t for c in children for t in restrict_tree(c, U)]
    if root in U:
        return [(root, tuple(below))]
    return below


def restrict_forest(forest, U) -> tuple:
    """Each node of ``U`` hangs from its nearest ancestor in ``U``; preorder is kept."""
    U = frozenset(U)
    return tuple(t for tree in forest for t in restrict_tree(tree, U))


def planar_trees(labels) -> list:
    labels = sorted_labels(labels)
    out = []
    for i, root in enumerate(labels):
        rest = labels[:i] + labels[i + 1:]
        out.extend((root, f) for f in planar_forests(rest))
    return out


def planar_forests(labels) -> list:
    labels = sorted_labels(labels)
    if not labels:
        return [()]
    out = []
    for k in range(1, len(labels) + 1):
        for first in itertools.combinations(labels, k):
            rest = [a for a in labels if a not in first]
            tails = planar_forests(rest)
            for t in planar_trees(first):
                out.extend((t,) + f for f in tails)
    return out


def rooted_trees(labels) -> list:
    labels = sorted_labels(labels)
    out = []
    for i, root in enumerate(labels):
        rest = labels[:i] + labels[i + 1:]
        out.extend((root, f) for f in rooted_forests(rest))
    return out


def rooted_forests(labels) -> list:
    """Canonical non-planar forests; the tree holding the least label comes first."""
    labels = sorted_labels(labels)
    if not labels:
        return [()]
    first, others = labels[0], labels[1:]
    out = []
    for k in range(len(others) + 1):
        for mates in itertools.combinations(others, k):
            rest = [a for a in others if a not in mates]
            tails = rooted_forests(rest)
            for t in rooted_trees((first,) + mates):
                out.extend(canon_forest((t,) + f) for f in tails)
    return out


def tree_shape(tree, planar: bool):
    shapes = [tree_shape(c, planar) for c in tree[1]]
    return tuple(shapes) if planar else tuple(sorted(shapes))


def tree_size(tree) -> int:
    return 1 + sum(tree_size(c) for c in tree[1])


def encode_tree(tree):
    root, children = tree
    return [root, [encode_tree(c) for c in children]]


def decode_tree(obj, path="$"):
    items = decode_list(obj, path)
    if len(items) != 2:
        raise EncodingError(f"{path}: a tree is [label, [children...]]")
    check_labels(items[:1], path)
    kids = decode_list(items[1], f"{path}[1]")
    return (items[0], tuple(decode_tree(c, f"{path}[1][{i}]") for i, c in enumerate(kids)))


def tree_text(tree) -> str:
    root, children = tree
    if not children:
        return str(root)
    return f"{root}(" + ",".join(tree_text(c) for c in children) + ")"


class ForestHopf(HopfMonoid):
    """Concatenation product; ``Δ_{S,T}(f) = f|_S ⊗ f|_T`` when ``S`` is admissible, else 0."""

    def __init__(self, planar: bool):
        self.planar = planar
        self.commutative = not planar
        self.name = "PlanarForest" if planar else "Forest"
        self.unit = ()
        self._basis: dict = {}

    def canon(self, forest) -> tuple:
        return tuple(forest) if self.planar else canon_forest(forest)

    def basis(self, I):
        I = frozenset(I)
        if I not in self._basis:
            self._basis[I] = planar_forests(I) if self.planar else rooted_forests(I)
        return self._basis[I]

    def support(self, x):
        return forest_labels(x)

    def mu(self, x, y):
        return LinComb.basis(self.canon(x + y))

    def delta(self, S, T, x):
        if not is_admissible(x, S):
            return LinComb.zero()
        return LinComb.basis((self.canon(restrict_forest(x, S)),
                              self.canon(restrict_forest(x, T))))

    def relabel(self, x, sigma):
        check_bijection(sigma, self.support(x))

        def rl(tree):
            return (sigma[tree[0]], tuple(rl(c) for c in tree[1]))

        return self.canon(rl(t) for t in x)

    def shape(self, x):
        shapes = [tree_shape(t, self.planar) for t in x]
        return tuple(shapes) if self.planar else tuple(sorted(shapes))

    def encode(self, x):
        return [encode_tree(t) for t in x]

    def decode(self, obj, path="$"):
        items = decode_list(obj, path)
        forest = tuple(decode_tree(t, f"{path}[{i}]") for i, t in enumerate(items))
        labels = [a for t in forest for a in tree_labels(t)]
        check_labels(labels, path)
        if len(set(labels)) != len(labels):
            raise EncodingError(f"{path}: repeated node label")
        return self.canon(forest)

    def pretty(self, x):
        if not x:
            return "1"
        return " ".join(tree_text(t) for t in x)


PLANAR_FOREST = ForestHopf(planar=True)
FOREST = ForestHopf(planar=False)


def forget_planar(forest) -> tuple:
    return canon_forest(forest)


FORGET_PLANAR = HopfMorphism(PLANAR_FOREST, FOREST,
                             lambda x: LinComb.basis(forget_planar(x)), "PlanarForest->Forest")

__all__ = [
    "FOREST", "FORGET_PLANAR", "ForestHopf", "PLANAR_FOREST", "admissible_subsets",
    "ancestors", "canon_forest", "canon_tree", "forest_labels", "forget_planar",
    "is_admissible", "planar_forests", "planar_trees", "restrict_forest",
    "rooted_forests", "rooted_trees", "tree_shape", "tree_size",
]
