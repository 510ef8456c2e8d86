"""Connected Hopf monoids in species: interface, antipode and axiom checkers.

A Hopf monoid is described by its basis on each finite label set together
with a product ``mu(x, y)`` (supports of ``x`` and ``y`` disjoint) and a
coproduct ``delta(S, T, x)`` for every ordered decomposition ``S ⊔ T`` of the
support of ``x``.  Both return :class:`~hopfspecies.core.LinComb`; the keys
of a coproduct are pairs ``(x_S, x_T)``.

The checkers are exhaustive over all decompositions and basis elements of a
given label set and return a :class:`Report`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Hashable, Iterable

from .core import (
    Accumulator,
    LinComb,
    check_bijection,
    decompositions,
    sorted_labels,
    tensor,
)


class HopfMonoid:
    """Base class for connected Hopf monoids with a distinguished basis."""

    name = "H"
    unit: Hashable = ()
    commutative = False
    cocommutative = False

    def basis(self, I) -> list:
        raise NotImplementedError

    def support(self, x) -> frozenset:
        raise NotImplementedError

    def mu(self, x, y) -> LinComb:
        raise NotImplementedError

    def delta(self, S, T, x) -> LinComb:
        raise NotImplementedError

    def relabel(self, x, sigma: dict):
        raise NotImplementedError

    def shape(self, x) -> Hashable:
        """Label-free invariant that separates relabeling orbits.

        The default is a brute-force minimum over all relabelings onto
        ``{1..n}``; subclasses override it with a structural shape.
        """
        labels = sorted_labels(self.support(x))
        best = None
        for perm in itertools.permutations(range(1, len(labels) + 1)):
            y = self.relabel(x, dict(zip(labels, perm)))
            key = repr(y)
            if best is None or key < best:
                best = key
        return best

    # text encodings; concrete monoids override
    def encode(self, x) -> Any:
        return x

    def decode(self, obj) -> Hashable:
        return obj

    def pretty(self, x) -> str:
        return repr(x)

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


def counit(x, H: HopfMonoid) -> Fraction:
    return Fraction(1) if x == H.unit else Fraction(0)


def mu_lin(H: HopfMonoid, X: LinComb, Y: LinComb) -> LinComb:
    acc = Accumulator()
    for x, a in X.items():
        for y, b in Y.items():
            acc.add(H.mu(x, y), a * b)
    return acc.result()


def delta_lin(H: HopfMonoid, S, T, X: LinComb) -> LinComb:
    acc = Accumulator()
    for x, a in X.items():
        acc.add(H.delta(S, T, x), a)
    return acc.result()


def product_of(H: HopfMonoid, factors: Iterable) -> LinComb:
    """Iterated product of basis elements, left to right."""
    out = LinComb.basis(H.unit)
    for f in factors:
        out = mu_lin(H, out, LinComb.basis(f))
    return out


@dataclass(frozen=True)
class HopfMorphism:
    """A linear map between Hopf monoids given on basis elements."""

    source: HopfMonoid
    target: HopfMonoid
    fn: Callable[[Hashable], LinComb]
    name: str = "f"

    def __call__(self, x) -> LinComb:
        return self.fn(x)

    def lin(self, X: LinComb) -> LinComb:
        return X.map(self.fn)


def compose(g: HopfMorphism, f: HopfMorphism, name: str | None = None) -> HopfMorphism:
    """``g ∘ f``."""
    return HopfMorphism(f.source, g.target, lambda x: g.lin(f(x)),
                        name or f"{g.name}∘{f.name}")


@dataclass
class Report:
    """Outcome of an exhaustive check; ``counterexample`` is set on failure."""

    check: str
    monoid: str
    labels: tuple
    ok: bool = True
    cases: int = 0
    counterexample: dict | None = field(default=None)

    def fail(self, **context):
        if self.ok:
            self.ok = False
            self.counterexample = context

    def __bool__(self):
        return self.ok

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.check} {self.monoid} |I|={len(self.labels)} ({self.cases} cases)"


class _Antipode:
    # memo is confined to one monoid instance
    def __init__(self, H: HopfMonoid):
        self.H = H
        self.memo: dict = {}

    def __call__(self, x) -> LinComb:
        memo = self.memo
        if x in memo:
            return memo[x]
        H = self.H
        I = H.support(x)
        if not I:
            out = LinComb.basis(x)
        else:
            acc = Accumulator()
            acc.add_term(x, -1)
            for S, T in decompositions(I, 2):
                if not S or not T:
                    continue
                for (xs, xt), c in H.delta(S, T, x).items():
                    acc.add(mu_lin(H, self(xs), LinComb.basis(xt)), -c)
            out = acc.result()
        memo[x] = out
        return out


def _antipode_for(H: HopfMonoid) -> _Antipode:
    s = H.__dict__.get("_antipode")
    if s is None:
        s = H._antipode = _Antipode(H)
    return s


def antipode(H: HopfMonoid, x) -> LinComb:
    """Antipode of a basis element or linear combination.

    Uses the recursion ``s(x) = -x - Σ μ(s(x_S) ⊗ x_T)`` over decompositions
    with ``S, T`` nonempty, forced by the left convolution identity.
    """
    s = _antipode_for(H)
    if isinstance(x, LinComb):
        return x.map(s)
    return s(x)


def _triples(I):
    return decompositions(I, 3)


def _memo_delta(H: HopfMonoid) -> Callable:
    # cache confined to one check call
    cache: dict = {}

    def delta(S, T, x):
        key = (S, T, x)
        out = cache.get(key)
        if out is None:
            out = cache[key] = H.delta(S, T, x)
        return out

    return delta


def check_associativity(H: HopfMonoid, I) -> Report:
    rep = Report("associativity", H.name, sorted_labels(I))
    for R, S, T in _triples(I):
        for x in H.basis(R):
            for y in H.basis(S):
                xy = H.mu(x, y)
                for z in H.basis(T):
                    rep.cases += 1
                    left = mu_lin(H, xy, LinComb.basis(z))
                    right = mu_lin(H, LinComb.basis(x), H.mu(y, z))
                    if left != right:
                        rep.fail(decomposition=(R, S, T), input=(x, y, z),
                                 left=left, right=right)
                        return rep
    return rep


def check_coassociativity(H: HopfMonoid, I) -> Report:
    rep = Report("coassociativity", H.name, sorted_labels(I))
    delta = _memo_delta(H)
    for x in H.basis(I):
        for R, S, T in _triples(I):
            rep.cases += 1
            acc = Accumulator()
            for (xrs, xt), c in delta(R | S, T, x).items():
                for (xr, xs), c2 in delta(R, S, xrs).items():
                    acc.add_term((xr, xs, xt), c * c2)
            left = acc.result()
            acc = Accumulator()
            for (xr, xst), c in delta(R, S | T, x).items():
                for (xs, xt), c2 in delta(S, T, xst).items():
                    acc.add_term((xr, xs, xt), c * c2)
            right = acc.result()
            if left != right:
                rep.fail(decomposition=(R, S, T), input=x, left=left, right=right)
                return rep
    return rep


def check_counit(H: HopfMonoid, I) -> Report:
    """Δ_{∅,I}(x) = 1⊗x and Δ_{I,∅}(x) = x⊗1, and the unit is neutral."""
    rep = Report("counit", H.name, sorted_labels(I))
    I = frozenset(I)
    empty = frozenset()
    for x in H.basis(I):
        rep.cases += 1
        checks = [
            (H.delta(empty, I, x), LinComb.basis((H.unit, x))),
            (H.delta(I, empty, x), LinComb.basis((x, H.unit))),
            (H.mu(H.unit, x), LinComb.basis(x)),
            (H.mu(x, H.unit), LinComb.basis(x)),
        ]
        for got, want in checks:
            if got != want:
                rep.fail(input=x, left=got, right=want)
                return rep
    return rep


def check_compatibility(H: HopfMonoid, I) -> Report:
    """Δ_{S',T'} ∘ μ_{S,T} against the four-corner composite through A, B, C, D."""
    rep = Report("compatibility", H.name, sorted_labels(I))
    decs = decompositions(I, 2)
    delta = _memo_delta(H)
    for S, T in decs:
        bx, by = H.basis(S), H.basis(T)
        for x in bx:
            for y in by:
                xy = H.mu(x, y)
                for S2, T2 in decs:
                    rep.cases += 1
                    A, B, C, D = S & S2, S & T2, T & S2, T & T2
                    left = delta_lin(H, S2, T2, xy)
                    acc = Accumulator()
                    for (xa, xb), c in delta(A, B, x).items():
                        for (yc, yd), c2 in delta(C, D, y).items():
                            acc.add(tensor(H.mu(xa, yc), H.mu(xb, yd)), c * c2)
                    right = acc.result()
                    if left != right:
                        rep.fail(decomposition=(S, T, S2, T2), input=(x, y),
                                 left=left, right=right)
                        return rep
    return rep


def check_antipode(H: HopfMonoid, I) -> Report:
    """Both convolution identities: Σ μ(s⊗id)Δ = ιε = Σ μ(id⊗s)Δ."""
    rep = Report("antipode", H.name, sorted_labels(I))
    decs = decompositions(I, 2)
    for x in H.basis(I):
        rep.cases += 1
        left, right = Accumulator(), Accumulator()
        for S, T in decs:
            for (xs, xt), c in H.delta(S, T, x).items():
                left.add(mu_lin(H, antipode(H, xs), LinComb.basis(xt)), c)
                right.add(mu_lin(H, LinComb.basis(xs), antipode(H, xt)), c)
        want = LinComb.basis(x) if not I else LinComb.zero()
        for side, got in (("left", left.result()), ("right", right.result())):
            if got != want:
                rep.fail(side=side, input=x, left=got, right=want)
                return rep
    return rep


def check_morphism(f: HopfMorphism, I) -> Report:
    """f∘μ = μ∘(f⊗f) and (f⊗f)∘Δ = Δ∘f on every basis element over ``I``."""
    src, tgt = f.source, f.target
    rep = Report("morphism", f.name, sorted_labels(I))
    if f(src.unit) != LinComb.basis(tgt.unit):
        rep.fail(input=src.unit, left=f(src.unit), right=LinComb.basis(tgt.unit))
        return rep
    decs = decompositions(I, 2)
    fmemo: dict = {}

    def F(x):
        if x not in fmemo:
            fmemo[x] = f(x)
        return fmemo[x]

    for S, T in decs:
        for x in src.basis(S):
            for y in src.basis(T):
                rep.cases += 1
                left = f.lin(src.mu(x, y))
                right = mu_lin(tgt, F(x), F(y))
                if left != right:
                    rep.fail(kind="product", decomposition=(S, T), input=(x, y),
                             left=left, right=right)
                    return rep
    for x in src.basis(I):
        fx = F(x)
        for S, T in decs:
            rep.cases += 1
            acc = Accumulator()
            for (xs, xt), c in src.delta(S, T, x).items():
                acc.add(tensor(F(xs), F(xt)), c)
            left = acc.result()
            right = delta_lin(tgt, S, T, fx)
            if left != right:
                rep.fail(kind="coproduct", decomposition=(S, T), input=x,
                         left=left, right=right)
                return rep
    return rep


def check_naturality(H: HopfMonoid, I, targets=None) -> Report:
    """Structure maps commute with relabeling by every bijection of ``I``.

    ``targets`` optionally supplies a second label set of the same size; the
    bijections then run over all maps ``I -> targets``.
    """
    labels = sorted_labels(I)
    image = sorted_labels(targets) if targets is not None else labels
    if len(image) != len(labels):
        raise ValueError("target label set has the wrong size")
    rep = Report("naturality", H.name, labels)
    decs = decompositions(labels, 2)
    for perm in itertools.permutations(image):
        sigma = dict(zip(labels, perm))

        def rl(x, sub):
            return H.relabel(x, {k: sigma[k] for k in sub})

        for S, T in decs:
            for x in H.basis(S):
                for y in H.basis(T):
                    rep.cases += 1
                    left = H.mu(x, y).map_keys(lambda z: rl(z, S | T))
                    right = H.mu(rl(x, S), rl(y, T))
                    if left != right:
                        rep.fail(kind="product", relabeling=sigma, input=(x, y),
                                 left=left, right=right)
                        return rep
        for x in H.basis(labels):
            for S, T in decs:
                rep.cases += 1
                S2 = frozenset(sigma[a] for a in S)
                T2 = frozenset(sigma[a] for a in T)
                left = H.delta(S, T, x).map_keys(
                    lambda p: (rl(p[0], S), rl(p[1], T)))
                right = H.delta(S2, T2, rl(x, frozenset(labels)))
                if left != right:
                    rep.fail(kind="coproduct", relabeling=sigma, input=x,
                             left=left, right=right)
                    return rep
    return rep


def check_hopf(H: HopfMonoid, I) -> list[Report]:
    """All axiom checks on one label set."""
    return [
        check_associativity(H, I),
        check_coassociativity(H, I),
        check_compatibility(H, I),
        check_antipode(H, I),
    ]


class CauchyProduct(HopfMonoid):
    """``H1 · H2``: pairs ``(x1, x2)`` on disjoint supports, coordinatewise maps."""

    def __init__(self, H1: HopfMonoid, H2: HopfMonoid):
        self.H1, self.H2 = H1, H2
        self.name = f"{H1.name}·{H2.name}"
        self.unit = (H1.unit, H2.unit)
        self.commutative = H1.commutative and H2.commutative
        self.cocommutative = H1.cocommutative and H2.cocommutative

    def basis(self, I):
        out = []
        for P, Q in decompositions(I, 2):
            for x in self.H1.basis(P):
                for y in self.H2.basis(Q):
                    out.append((x, y))
        return out

    def support(self, x):
        return self.H1.support(x[0]) | self.H2.support(x[1])

    def mu(self, x, y):
        return tensor(self.H1.mu(x[0], y[0]), self.H2.mu(x[1], y[1]))

    def delta(self, S, T, x):
        a, b = x
        P, Q = self.H1.support(a), self.H2.support(b)
        acc = Accumulator()
        for (as_, at), c in self.H1.delta(S & P, T & P, a).items():
            for (bs, bt), c2 in self.H2.delta(S & Q, T & Q, b).items():
                acc.add_term(((as_, bs), (at, bt)), c * c2)
        return acc.result()

    def relabel(self, x, sigma):
        P, Q = self.H1.support(x[0]), self.H2.support(x[1])
        check_bijection(sigma, P | Q)
        return (self.H1.relabel(x[0], {k: sigma[k] for k in P}),
                self.H2.relabel(x[1], {k: sigma[k] for k in Q}))

    def shape(self, x):
        return (self.H1.shape(x[0]), self.H2.shape(x[1]))

    def encode(self, x):
        return [self.H1.encode(x[0]), self.H2.encode(x[1])]

    def decode(self, obj):
        return (self.H1.decode(obj[0]), self.H2.decode(obj[1]))

    def pretty(self, x):
        return f"{self.H1.pretty(x[0])} ⊗ {self.H2.pretty(x[1])}"


def cauchy_product_hopf(H1: HopfMonoid, H2: HopfMonoid) -> CauchyProduct:
    return CauchyProduct(H1, H2)


class DualHopf(HopfMonoid):
    """The dual Hopf monoid in the dual of the distinguished basis.

    The product is the transpose of the coproduct of ``H`` and vice versa; the
    basis of ``H`` is paired with itself.
    """

    def __init__(self, H: HopfMonoid):
        self.H = H
        self.name = f"{H.name}*"
        self.unit = H.unit
        self.commutative = H.cocommutative
        self.cocommutative = H.commutative

    def basis(self, I):
        return self.H.basis(I)

    def support(self, x):
        return self.H.support(x)

    def mu(self, x, y):
        H = self.H
        S, T = H.support(x), H.support(y)
        acc = Accumulator()
        for z in H.basis(S | T):
            c = H.delta(S, T, z).coeff((x, y))
            if c:
                acc.add_term(z, c)
        return acc.result()

    def delta(self, S, T, z):
        H = self.H
        acc = Accumulator()
        for x in H.basis(S):
            for y in H.basis(T):
                c = H.mu(x, y).coeff(z)
                if c:
                    acc.add_term((x, y), c)
        return acc.result()

    def relabel(self, x, sigma):
        return self.H.relabel(x, sigma)

    def shape(self, x):
        return self.H.shape(x)

    def encode(self, x):
        return self.H.encode(x)

    def decode(self, obj):
        return self.H.decode(obj)

    def pretty(self, x):
        return self.H.pretty(x)


@dataclass(frozen=True)
class StructureConstants:
    """Product and coproduct constants of ``H`` on one label set.

    ``product[(x, y, z)]`` is the coefficient of ``z`` in ``μ(x, y)`` and
    ``coproduct[(z, x, y)]`` the coefficient of ``x ⊗ y`` in ``Δ(z)``, where
    the decomposition is read off the supports of ``x`` and ``y``.
    """

    labels: tuple
    product: dict
    coproduct: dict

    def dual(self) -> "StructureConstants":
        return StructureConstants(
            self.labels,
            {(x, y, z): c for (z, x, y), c in self.coproduct.items()},
            {(z, x, y): c for (x, y, z), c in self.product.items()},
        )


def structure_constants(H: HopfMonoid, I) -> StructureConstants:
    I = frozenset(I)
    prod, cop = {}, {}
    for S, T in decompositions(I, 2):
        for x in H.basis(S):
            for y in H.basis(T):
                for z, c in H.mu(x, y).items():
                    prod[(x, y, z)] = c
        for z in H.basis(I):
            for (x, y), c in H.delta(S, T, z).items():
                cop[(z, x, y)] = c
    return StructureConstants(sorted_labels(I), prod, cop)


def graded_dual(H: HopfMonoid, n: int) -> StructureConstants:
    """Structure constants of the dual on ``{1..n}`` (transposed constants)."""
    return structure_constants(H, range(1, n + 1)).dual()
