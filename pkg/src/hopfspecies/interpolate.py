"""Interpolating families ``rc = ↑b·↓d`` and the carrying maps between levels.

A family pairs a Hopf monoid ``b`` generated (freely, or freely commutatively)
by a set of generators with a commutative ``d`` and a surjection ``π``
sending each generator to a ``d``-structure on the same labels.  At level
``r`` a basis element is a pair ``(large, small)``: a ``b``-structure built
from generators with at least ``r`` labels, and a ``d``-structure built from
``d``-generators with fewer than ``r`` labels.

The quotient by the relations ``g ≡ π(g)`` (``g`` small) is realized by a
normal form: small generators are pushed through ``π`` onto the commutative
side, large ones stay in place.  In every family here ``π`` sends a basis
generator to a single basis structure, so the normal form of a basis pair is
again a basis pair.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

from .core import Accumulator, LinComb, check_bijection, decompositions
from .hopf import HopfMonoid, HopfMorphism, Report, check_morphism
from .monoids.encoding import EncodingError, decode_list
from .monoids.forests import (
    FOREST,
    PLANAR_FOREST,
    canon_forest,
    canon_tree,
    decode_tree,
    encode_tree,
    tree_size,
)
from .monoids.free import BIJ, CYC, EPLUS, PI, SIGMA
from .monoids.parking import PF, decode_weak_composition, is_block_parking, pf_blocks, pi_pf
from .monoids.parking import size as wc_size
from . import series


class InterpElem(NamedTuple):
    large: tuple
    small: tuple


@dataclass(frozen=True)
class InterpFamily:
    """Generator-level description of ``b``, ``d`` and ``π``."""

    name: str
    flavor: str  # "T": ordered generator lists; "S": generator multisets
    b: HopfMonoid
    d: HopfMonoid
    generators: Callable      # b element -> list of generators
    assemble: Callable        # list of generators -> b element
    gen_size: Callable
    pi_gen: Callable          # generator -> list of d-generators
    d_generators: Callable
    d_assemble: Callable
    d_gen_size: Callable
    gen_encode: Callable
    gen_decode: Callable      # (obj, path) -> generator
    p_dims: Callable          # N -> generator dimensions
    q_dims: Callable          # N -> d-generator dimensions

    def pi(self, x) -> tuple:
        """The surjection ``b -> d`` on a basis element."""
        return self.d_assemble([h for g in self.generators(x) for h in self.pi_gen(g)])

    def pi_morphism(self) -> HopfMorphism:
        return HopfMorphism(self.b, self.d, lambda x: LinComb.basis(self.pi(x)),
                            f"pi[{self.name}]")

    def is_large(self, x, r: int) -> bool:
        return all(self.gen_size(g) >= r for g in self.generators(x))

    def is_small(self, y, r: int) -> bool:
        return all(self.d_gen_size(h) < r for h in self.d_generators(y))


def normal_form(fam: InterpFamily, r: int, large, small) -> InterpElem:
    """Move every generator with fewer than ``r`` labels through ``π`` to the small side."""
    keep, moved = [], []
    for g in fam.generators(large):
        if fam.gen_size(g) >= r:
            keep.append(g)
        else:
            moved.extend(fam.pi_gen(g))
    if not moved:
        return InterpElem(large, small)
    return InterpElem(fam.assemble(keep), fam.d_assemble(list(fam.d_generators(small)) + moved))


def rc_normalform(fam: InterpFamily, r: int, raw) -> InterpElem:
    large, small = raw
    return normal_form(fam, r, large, small)


def rc_basis(fam: InterpFamily, r: int, I) -> list[InterpElem]:
    return RCHopf(fam, r).basis(I)


class RCHopf(HopfMonoid):
    """Level ``r`` of an interpolating family."""

    def __init__(self, fam: InterpFamily, r: int):
        if r < 1:
            raise ValueError("level r must be at least 1")
        self.fam, self.r = fam, r
        self.name = f"{fam.name}[r={r}]"
        self.unit = InterpElem(fam.b.unit, fam.d.unit)
        self.commutative = fam.flavor == "S"
        self._basis: dict = {}

    def nf(self, large, small) -> InterpElem:
        return normal_form(self.fam, self.r, large, small)

    def basis(self, I):
        I = frozenset(I)
        if I in self._basis:
            return self._basis[I]
        fam, r = self.fam, self.r
        out = []
        for P, Q in decompositions(I, 2):
            larges = [x for x in fam.b.basis(P) if fam.is_large(x, r)]
            smalls = [y for y in fam.d.basis(Q) if fam.is_small(y, r)]
            out.extend(InterpElem(x, y) for x in larges for y in smalls)
        self._basis[I] = out
        return out

    def support(self, u):
        return self.fam.b.support(u.large) | self.fam.d.support(u.small)

    def mu(self, u, v):
        b, d = self.fam.b, self.fam.d
        acc = Accumulator()
        for x, c in b.mu(u.large, v.large).items():
            for y, c2 in d.mu(u.small, v.small).items():
                acc.add_term(self.nf(x, y), c * c2)
        return acc.result()

    def delta(self, S, T, u):
        b, d = self.fam.b, self.fam.d
        S, T = frozenset(S), frozenset(T)
        P, Q = b.support(u.large), d.support(u.small)
        acc = Accumulator()
        for (xs, xt), c in b.delta(S & P, T & P, u.large).items():
            for (ys, yt), c2 in d.delta(S & Q, T & Q, u.small).items():
                acc.add_term((self.nf(xs, ys), self.nf(xt, yt)), c * c2)
        return acc.result()

    def relabel(self, u, sigma):
        b, d = self.fam.b, self.fam.d
        P, Q = b.support(u.large), d.support(u.small)
        check_bijection(sigma, P | Q)
        return InterpElem(b.relabel(u.large, {k: sigma[k] for k in P}),
                          d.relabel(u.small, {k: sigma[k] for k in Q}))

    def shape(self, u):
        return (self.fam.b.shape(u.large), self.fam.d.shape(u.small))

    def encode(self, u):
        fam = self.fam
        return {"r": self.r,
                "large": [fam.gen_encode(g) for g in fam.generators(u.large)],
                "small": fam.d.encode(u.small)}

    def decode(self, obj, path="$"):
        return decode_interp(self.fam, obj, path, r=self.r)

    def pretty(self, u):
        return f"({self.fam.b.pretty(u.large)}; {self.fam.d.pretty(u.small)})"


def decode_interp(fam: InterpFamily, obj, path="$", r: int | None = None) -> InterpElem:
    """Parse ``{"r": .., "large": [generators], "small": d-structure}``."""
    if not isinstance(obj, dict):
        raise EncodingError(f"{path}: expected an object with fields r, large, small")
    level = obj.get("r", r)
    if not isinstance(level, int) or isinstance(level, bool) or level < 1:
        raise EncodingError(f"{path}.r: level must be a positive integer")
    if r is not None and level != r:
        raise EncodingError(f"{path}.r: expected level {r}, got {level}")
    gens = [fam.gen_decode(g, f"{path}.large[{i}]")
            for i, g in enumerate(decode_list(obj.get("large", []), f"{path}.large"))]
    for i, g in enumerate(gens):
        if fam.gen_size(g) < level:
            raise EncodingError(f"{path}.large[{i}]: generator has fewer than r={level} labels")
    large = fam.assemble(gens)
    small = fam.d.decode(obj.get("small", []), f"{path}.small")
    if not fam.is_small(small, level):
        raise EncodingError(f"{path}.small: a d-generator has at least r={level} labels")
    if fam.b.support(large) & fam.d.support(small):
        raise EncodingError(f"{path}: large and small parts share labels")
    if len(fam.b.support(large)) != sum(fam.gen_size(g) for g in gens):
        raise EncodingError(f"{path}.large: generators share labels")
    return InterpElem(large, small)


def rc_hopf(fam: InterpFamily, r: int) -> RCHopf:
    return RCHopf(fam, r)


def port(fam: InterpFamily, r: int, s: int, u: InterpElem) -> InterpElem:
    """Carry a level-``r`` element to level ``s > r``."""
    if not r < s:
        raise ValueError(f"port needs r < s (got r={r}, s={s})")
    return normal_form(fam, s, u.large, u.small)


def port_infinity(fam: InterpFamily, r: int, u: InterpElem) -> tuple:
    """The stable image: every generator is small once ``s > |I|``."""
    n = len(fam.b.support(u.large) | fam.d.support(u.small))
    return normal_form(fam, n + 1, u.large, u.small).small


def port_from_b(fam: InterpFamily, r: int, x) -> InterpElem:
    return normal_form(fam, r, x, fam.d.unit)


def port_morphism(fam: InterpFamily, r: int, s: int) -> HopfMorphism:
    src, tgt = RCHopf(fam, r), RCHopf(fam, s)
    if not r < s:
        raise ValueError(f"port needs r < s (got r={r}, s={s})")
    return HopfMorphism(src, tgt, lambda u: LinComb.basis(port(fam, r, s, u)),
                        f"port[{fam.name}]^{r}_{s}")


def port_from_b_morphism(fam: InterpFamily, r: int) -> HopfMorphism:
    return HopfMorphism(fam.b, RCHopf(fam, r), lambda x: LinComb.basis(port_from_b(fam, r, x)),
                        f"port[{fam.name}]_{r}")


def port_infinity_morphism(fam: InterpFamily, r: int) -> HopfMorphism:
    return HopfMorphism(RCHopf(fam, r), fam.d,
                        lambda u: LinComb.basis(port_infinity(fam, r, u)),
                        f"port[{fam.name}]^{r}_inf")


def rc_egf(fam: InterpFamily, r: int, N: int) -> series.PowerSeries:
    return series.interp_egf(fam.p_dims(N), fam.q_dims(N), r, N, fam.flavor)


def check_composition_law(fam: InterpFamily, r: int, s: int, t: int, I) -> Report:
    rep = Report("composition", f"{fam.name} r={r},s={s},t={t}", tuple(sorted(I)))
    for u in RCHopf(fam, r).basis(I):
        rep.cases += 1
        lhs = port(fam, s, t, port(fam, r, s, u))
        rhs = port(fam, r, t, u)
        if lhs != rhs:
            rep.fail(x=u, lhs=lhs, rhs=rhs)
            break
    return rep


def check_surjective(fam: InterpFamily, r: int, s: int | None, I) -> Report:
    """Image of the level-``r`` basis (or of ``b`` when ``r`` is 0) covers level ``s``."""
    target = RCHopf(fam, s).basis(I)
    if r == 0:
        image = {port_from_b(fam, s, x) for x in fam.b.basis(I)}
        label = f"{fam.name} b->r={s}"
    else:
        image = {port(fam, r, s, u) for u in RCHopf(fam, r).basis(I)}
        label = f"{fam.name} r={r}->s={s}"
    rep = Report("surjective", label, tuple(sorted(I)), cases=len(target))
    missing = [u for u in target if u not in image]
    if missing or not image <= set(target):
        rep.fail(missing=missing[:1], extra=list(image - set(target))[:1])
    return rep


def check_stable_image(fam: InterpFamily, r: int, I) -> Report:
    """``port_∞ ∘ port_r = π`` on all of ``b[I]``."""
    rep = Report("stable-image", f"{fam.name} r={r}", tuple(sorted(I)))
    for x in fam.b.basis(I):
        rep.cases += 1
        got = port_infinity(fam, r, port_from_b(fam, r, x))
        want = fam.pi(x)
        if got != want:
            rep.fail(x=x, got=got, want=want)
            break
    return rep


def check_interpolation(fam: InterpFamily, r_max: int, I) -> list[Report]:
    """Composition law, port morphisms, surjectivity and the stable image, levels ``≤ r_max``."""
    I = frozenset(I)
    reports = []
    levels = range(1, r_max + 1)
    for r in levels:
        reports.append(check_morphism(port_from_b_morphism(fam, r), I))
        reports.append(check_surjective(fam, 0, r, I))
        reports.append(check_stable_image(fam, r, I))
        for s in levels:
            if s <= r:
                continue
            reports.append(check_morphism(port_morphism(fam, r, s), I))
            reports.append(check_surjective(fam, r, s, I))
            for t in levels:
                if t > s:
                    reports.append(check_composition_law(fam, r, s, t, I))
    return reports


# families

def _block_decode(obj, path):
    return EPLUS.decode(obj, path)


def _cycle_decode(obj, path):
    return CYC.decode(obj, path)


def _bpf_decode(obj, path):
    phi = decode_weak_composition(obj, path)
    if not is_block_parking(phi):
        raise EncodingError(f"{path}: not a block parking function")
    return phi


SIGMA_FAMILY = InterpFamily(
    name="sigma", flavor="T", b=SIGMA, d=PI,
    generators=list, assemble=tuple, gen_size=len,
    pi_gen=lambda blk: [blk],
    d_generators=list, d_assemble=PI.canon, d_gen_size=len,
    gen_encode=list, gen_decode=_block_decode,
    p_dims=series.eplus_dims, q_dims=series.eplus_dims,
)

BIJ_FAMILY = InterpFamily(
    name="bij", flavor="S", b=BIJ, d=PI,
    generators=list, assemble=BIJ.canon, gen_size=len,
    pi_gen=lambda cycle: [tuple(sorted(cycle))],
    d_generators=list, d_assemble=PI.canon, d_gen_size=len,
    gen_encode=list, gen_decode=_cycle_decode,
    p_dims=series.cyc_dims, q_dims=series.eplus_dims,
)

PF_FAMILY = InterpFamily(
    name="pf", flavor="T", b=PF, d=PI,
    generators=pf_blocks, assemble=lambda gens: sum(gens, ()), gen_size=wc_size,
    pi_gen=lambda g: list(pi_pf(g)),
    d_generators=list, d_assemble=PI.canon, d_gen_size=len,
    gen_encode=lambda g: [list(b) for b in g], gen_decode=_bpf_decode,
    p_dims=series.block_parking_dims, q_dims=series.eplus_dims,
)

FOREST_FAMILY = InterpFamily(
    name="forest", flavor="T", b=PLANAR_FOREST, d=FOREST,
    generators=list, assemble=tuple, gen_size=tree_size,
    pi_gen=lambda tree: [canon_tree(tree)],
    d_generators=list, d_assemble=canon_forest, d_gen_size=tree_size,
    gen_encode=encode_tree, gen_decode=decode_tree,
    p_dims=series.planar_tree_dims, q_dims=series.rooted_tree_dims,
)

FAMILIES = {f.name: f for f in (SIGMA_FAMILY, BIJ_FAMILY, PF_FAMILY, FOREST_FAMILY)}
