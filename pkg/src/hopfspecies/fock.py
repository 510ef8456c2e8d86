"""The Fock functors ``K``, ``K^∨`` and ``K̄`` as graded Hopf algebras.

Degree ``n`` of ``K(H)`` and ``K^∨(H)`` has basis ``H[{1..n}]``; degree ``n``
of ``K̄(H)`` has one basis element per relabeling orbit, stored as an
:class:`OrbitElem` holding the least member of the orbit (by ``repr``).

* ``K``: product shifts the second factor past the first; coproduct sums
  ``Δ_{S,T}`` over all ``S ⊔ T = [n]`` and standardizes both legs.
* ``K^∨``: product sums over all ``S ⊔ T`` of the order-preserving copies of
  the factors on ``S`` and ``T``; coproduct uses ``[k] ⊔ [k+1..n]`` only.
* ``K̄``: the ``K`` recipe applied to orbit representatives, then each
  result projected to its orbit.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Hashable, NamedTuple

from .core import Accumulator, LinComb, canonical_set, decompositions, rank, standardization
from .hopf import HopfMonoid, Report
from .monoids.parking import PF

KINDS = ("K", "Kvee", "Kbar")


class OrbitElem(NamedTuple):
    degree: int
    rep: Hashable


def relabel_standard(H: HopfMonoid, x):
    """Standardize ``x`` onto ``{1..|support|}``."""
    return H.relabel(x, standardization(H.support(x)))


def _onto(H: HopfMonoid, x, target) -> Hashable:
    """Order-preserving copy of a structure on ``{1..k}`` onto the sorted set ``target``."""
    targets = sorted(target)
    return H.relabel(x, {i + 1: t for i, t in enumerate(targets)})


def _shift(H: HopfMonoid, x, offset: int):
    if offset == 0:
        return x
    return H.relabel(x, {a: a + offset for a in H.support(x)})


@dataclass
class FockImage:
    """``K``, ``K^∨`` or ``K̄`` of a Hopf monoid ``H``."""

    kind: str
    H: HopfMonoid
    _orbits: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown Fock functor {self.kind!r}; choose from {KINDS}")

    @property
    def name(self) -> str:
        return f"{self.kind}({self.H.name})"

    @property
    def unit(self):
        return OrbitElem(0, self.H.unit) if self.kind == "Kbar" else self.H.unit

    # orbits

    def _orbit_table(self, n: int) -> dict:
        table = self._orbits.get(n)
        if table is None:
            table = {}
            for x in self.H.basis(canonical_set(n)):
                key = self.H.shape(x)
                best = table.get(key)
                if best is None or repr(x) < repr(best):
                    table[key] = x
            self._orbits[n] = table
        return table

    def project(self, x) -> OrbitElem:
        """The orbit of a structure on any label set."""
        x = relabel_standard(self.H, x)
        n = len(self.H.support(x))
        return OrbitElem(n, self._orbit_table(n)[self.H.shape(x)])

    # graded structure

    def basis(self, n: int) -> list:
        if self.kind == "Kbar":
            return [OrbitElem(n, rep) for rep in
                    sorted(self._orbit_table(n).values(), key=repr)]
        return list(self.H.basis(canonical_set(n)))

    def degree(self, x) -> int:
        if self.kind == "Kbar":
            return x.degree
        return len(self.H.support(x))

    def product(self, x, y) -> LinComb:
        H = self.H
        if self.kind == "K":
            return H.mu(x, _shift(H, y, self.degree(x)))
        if self.kind == "Kbar":
            return kbar_product(self, x.rep, y.rep)
        s, t = self.degree(x), self.degree(y)
        acc = Accumulator()
        for S, T in decompositions(canonical_set(s + t), 2):
            if len(S) == s:
                acc.add(H.mu(_onto(H, x, S), _onto(H, y, T)))
        return acc.result()

    def coproduct(self, z) -> LinComb:
        H = self.H
        if self.kind == "Kbar":
            return kbar_coproduct(self, z.rep)
        n = self.degree(z)
        if self.kind == "K":
            splits = decompositions(canonical_set(n), 2)
        else:
            splits = [(frozenset(range(1, k + 1)), frozenset(range(k + 1, n + 1)))
                      for k in range(n + 1)]
        acc = Accumulator()
        for S, T in splits:
            for (a, b), c in H.delta(S, T, z).items():
                acc.add_term((relabel_standard(H, a), relabel_standard(H, b)), c)
        return acc.result()

    def counit(self, x) -> Fraction:
        return Fraction(1 if self.degree(x) == 0 else 0)

    def pretty(self, x) -> str:
        if self.kind == "Kbar":
            return "[" + self.H.pretty(x.rep) + "]"
        return self.H.pretty(x)

    def encode(self, x):
        if self.kind == "Kbar":
            return {"degree": x.degree, "orbit": self.H.encode(x.rep)}
        return self.H.encode(x)


def kbar_product(F: FockImage, x, y) -> LinComb:
    """Orbit of ``μ(x, y shifted)`` for representatives ``x``, ``y`` on ``[s]``, ``[t]``."""
    H = F.H
    prod = H.mu(x, _shift(H, y, len(H.support(x))))
    return prod.map_keys(F.project)


def kbar_coproduct(F: FockImage, z) -> LinComb:
    """Sum over ``S ⊔ T = [n]`` of ``Δ_{S,T}(z)``, each leg projected to its orbit."""
    H = F.H
    acc = Accumulator()
    for S, T in decompositions(H.support(z), 2):
        for (a, b), c in H.delta(S, T, z).items():
            acc.add_term((F.project(a), F.project(b)), c)
    return acc.result()


def fock_k(H: HopfMonoid) -> FockImage:
    return FockImage("K", H)


def fock_kvee(H: HopfMonoid) -> FockImage:
    return FockImage("Kvee", H)


def fock_kbar(H: HopfMonoid) -> FockImage:
    return FockImage("Kbar", H)


def fock_dims(kind: str, H: HopfMonoid, n_max: int) -> list[int]:
    F = FockImage(kind, H)
    return [len(F.basis(n)) for n in range(n_max + 1)]


# graded axiom checks

def _prod_lin(F: FockImage, X: LinComb, Y: LinComb) -> LinComb:
    acc = Accumulator()
    for x, c in X.items():
        for y, c2 in Y.items():
            acc.add(F.product(x, y), c * c2)
    return acc.result()


def _tensor_prod(F: FockImage, A: LinComb, B: LinComb) -> LinComb:
    """``(a⊗b)(c⊗d) = ac ⊗ bd``."""
    acc = Accumulator()
    for (a, b), c in A.items():
        for (a2, b2), c2 in B.items():
            for p, c3 in F.product(a, a2).items():
                for q, c4 in F.product(b, b2).items():
                    acc.add_term((p, q), c * c2 * c3 * c4)
    return acc.result()


def _degree_pairs(n: int):
    return [(i, n - i) for i in range(n + 1)]


def check_graded(F: FockImage, max_degree: int) -> list[Report]:
    """Associativity, coassociativity, compatibility and counit, total degree ``≤ max_degree``."""
    basis = {n: F.basis(n) for n in range(max_degree + 1)}
    assoc = Report("graded-associativity", F.name, tuple(range(max_degree)))
    coassoc = Report("graded-coassociativity", F.name, tuple(range(max_degree)))
    compat = Report("graded-compatibility", F.name, tuple(range(max_degree)))
    counit = Report("graded-counit", F.name, tuple(range(max_degree)))
    for n in range(max_degree + 1):
        for i in range(n + 1):
            for j in range(n - i + 1):
                k = n - i - j
                for x in basis[i]:
                    for y in basis[j]:
                        xy = F.product(x, y)
                        for z in basis[k]:
                            assoc.cases += 1
                            lhs = _prod_lin(F, xy, LinComb.basis(z))
                            rhs = _prod_lin(F, LinComb.basis(x), F.product(y, z))
                            if lhs != rhs:
                                assoc.fail(x=x, y=y, z=z, lhs=lhs, rhs=rhs)
        for z in basis[n]:
            cop = F.coproduct(z)
            left = Accumulator()
            right = Accumulator()
            for (a, b), c in cop.items():
                for (a1, a2), c2 in F.coproduct(a).items():
                    left.add_term((a1, a2, b), c * c2)
                for (b1, b2), c2 in F.coproduct(b).items():
                    right.add_term((a, b1, b2), c * c2)
            coassoc.cases += 1
            if left.result() != right.result():
                coassoc.fail(z=z)
            counit.cases += 1
            lhs = LinComb((a, c) for (a, b), c in cop.items() if F.degree(b) == 0)
            rhs = LinComb((b, c) for (a, b), c in cop.items() if F.degree(a) == 0)
            if lhs != LinComb.basis(z) or rhs != LinComb.basis(z):
                counit.fail(z=z)
        for i, j in _degree_pairs(n):
            for x in basis[i]:
                for y in basis[j]:
                    compat.cases += 1
                    lhs = F.product(x, y).map(F.coproduct)
                    rhs = _tensor_prod(F, F.coproduct(x), F.coproduct(y))
                    if lhs != rhs:
                        compat.fail(x=x, y=y, lhs=lhs, rhs=rhs)
    return [assoc, coassoc, compat, counit]


def check_graded_morphism(F: FockImage, G: FockImage, f: Callable, max_degree: int,
                          name: str = "f") -> Report:
    """``f`` (basis -> LinComb) respects products and coproducts up to ``max_degree``."""
    rep = Report("graded-morphism", f"{name}: {F.name}->{G.name}", tuple(range(max_degree)))
    ff = lambda X: X.map(f)  # noqa: E731

    def f2(T: LinComb) -> LinComb:
        acc = Accumulator()
        for (a, b), c in T.items():
            for p, c2 in f(a).items():
                for q, c3 in f(b).items():
                    acc.add_term((p, q), c * c2 * c3)
        return acc.result()

    if f(F.unit) != LinComb.basis(G.unit):
        rep.fail(unit=F.unit)
        return rep
    for n in range(max_degree + 1):
        for i, j in _degree_pairs(n):
            for x in F.basis(i):
                for y in F.basis(j):
                    rep.cases += 1
                    if ff(F.product(x, y)) != _prod_lin(G, f(x), f(y)):
                        rep.fail(x=x, y=y)
                        return rep
        for z in F.basis(n):
            rep.cases += 1
            if f2(F.coproduct(z)) != f(z).map(G.coproduct):
                rep.fail(z=z)
                return rep
    return rep


def check_cocommutative(F: FockImage, max_degree: int) -> Report:
    rep = Report("cocommutative", F.name, tuple(range(max_degree)))
    for n in range(max_degree + 1):
        for z in F.basis(n):
            rep.cases += 1
            cop = F.coproduct(z)
            if cop != cop.map_keys(lambda ab: (ab[1], ab[0])):
                rep.fail(z=z)
                break
    return rep


def check_commutative(F: FockImage, max_degree: int) -> Report:
    rep = Report("commutative", F.name, tuple(range(max_degree)))
    for n in range(max_degree + 1):
        for i, j in _degree_pairs(n):
            for x in F.basis(i):
                for y in F.basis(j):
                    rep.cases += 1
                    if F.product(x, y) != F.product(y, x):
                        rep.fail(x=x, y=y)
                        return rep
    return rep


def indecomposables_dims(F: FockImage, max_degree: int) -> list[int]:
    """``dim F_n - dim(F_+ · F_+)_n`` for ``n = 1..max_degree``."""
    out = []
    for n in range(1, max_degree + 1):
        products = [F.product(x, y) for i in range(1, n) for x in F.basis(i)
                    for y in F.basis(n - i)]
        out.append(len(F.basis(n)) - rank(products))
    return out


def check_kbar_representatives(F: FockImage, max_degree: int) -> Report:
    """Products and coproducts do not depend on the orbit representative."""
    H = F.H
    rep = Report("kbar-well-defined", F.name, tuple(range(max_degree)))

    def members(o: OrbitElem):
        labels = sorted(canonical_set(o.degree))
        for perm in itertools.permutations(labels):
            yield H.relabel(o.rep, dict(zip(labels, perm)))

    for n in range(max_degree + 1):
        for z in F.basis(n):
            want = kbar_coproduct(F, z.rep)
            for m in members(z):
                rep.cases += 1
                if kbar_coproduct(F, m) != want:
                    rep.fail(z=z, member=m)
                    return rep
        for i, j in _degree_pairs(n):
            for x in F.basis(i):
                for y in F.basis(j):
                    want = kbar_product(F, x.rep, y.rep)
                    for mx in members(x):
                        for my in itertools.islice(members(y), 6):
                            rep.cases += 1
                            if kbar_product(F, mx, my) != want:
                                rep.fail(x=x, y=y)
                                return rep
    return rep


# symmetric functions in the complete homogeneous basis

def _partition(parts) -> tuple:
    return tuple(sorted((p for p in parts if p), reverse=True))


def sym_product(lam, mu) -> LinComb:
    return LinComb.basis(_partition(lam + mu))


def sym_coproduct(lam) -> LinComb:
    """``Δ h_d = Σ_{i+j=d} h_i ⊗ h_j``, extended multiplicatively."""
    acc = Accumulator()
    for split in itertools.product(*(range(d + 1) for d in lam)):
        left = _partition(split)
        right = _partition(d - i for d, i in zip(lam, split))
        acc.add_term((left, right), 1)
    return acc.result()


class SymH:
    """Sym on the basis ``h_λ``, graded by ``|λ|``, as a stand-in Fock image."""

    name = "Sym"
    unit = ()

    def basis(self, n: int) -> list:
        def parts(n, cap):
            if n == 0:
                yield ()
                return
            for k in range(min(n, cap), 0, -1):
                for rest in parts(n - k, k):
                    yield (k,) + rest
        return list(parts(n, n))

    def degree(self, lam) -> int:
        return sum(lam)

    def product(self, lam, mu) -> LinComb:
        return sym_product(lam, mu)

    def coproduct(self, lam) -> LinComb:
        return sym_coproduct(lam)


SYM = SymH()


def cycle_type(sigma) -> tuple:
    return _partition(len(c) for c in sigma)


def kbar_bij_to_sym(x: OrbitElem) -> LinComb:
    """Cycle type ``λ`` goes to ``(Π λ_i!) h_λ``."""
    lam = cycle_type(x.rep)
    coeff = 1
    for d in lam:
        coeff *= factorial(d)
    return LinComb.basis(lam, coeff)


def hbar_generator(F: FockImage, d: int) -> OrbitElem:
    """``ħ_d``: the orbit of a ``d``-cycle in ``K̄(bij)``."""
    return F.project((tuple(range(1, d + 1)),) if d else ())


def check_kbar_bij_to_sym(F: FockImage, max_degree: int) -> Report:
    """The map respects coproducts on ``ħ_d`` and products of generators."""
    rep = Report("kbar-bij-to-sym", F.name, tuple(range(max_degree)))

    def f2(T: LinComb) -> LinComb:
        acc = Accumulator()
        for (a, b), c in T.items():
            for p, c2 in kbar_bij_to_sym(a).items():
                for q, c3 in kbar_bij_to_sym(b).items():
                    acc.add_term((p, q), c * c2 * c3)
        return acc.result()

    for d in range(max_degree + 1):
        h = hbar_generator(F, d)
        rep.cases += 1
        if f2(F.coproduct(h)) != kbar_bij_to_sym(h).map(sym_coproduct):
            rep.fail(generator=d)
            return rep
        for e in range(max_degree + 1 - d):
            g = hbar_generator(F, e)
            rep.cases += 1
            lhs = F.product(h, g).map(kbar_bij_to_sym)
            rhs = LinComb.zero()
            for p, c in kbar_bij_to_sym(h).items():
                for q, c2 in kbar_bij_to_sym(g).items():
                    rhs = rhs + sym_product(p, q) * (c * c2)
            if lhs != rhs:
                rep.fail(generators=(d, e))
                return rep
    return rep


# word-level model of K^∨(PF)

def pf_to_word(phi) -> tuple:
    """Position ``i`` holds the index of the block containing ``i``."""
    word = {}
    for j, blk in enumerate(phi, 1):
        for a in blk:
            word[a] = j
    return tuple(word[i] for i in sorted(word))


def word_to_pf(word) -> tuple:
    n = len(word)
    return tuple(tuple(i for i, w in enumerate(word, 1) if w == j) for j in range(1, n + 1))


def park_word(word) -> tuple:
    """Repeatedly close the first gap: find the least ``d`` with fewer than ``d``
    letters ``≤ d`` and lower every letter above ``d`` by one."""
    w = list(word)
    while True:
        gap = next((d for d in range(1, len(w) + 1) if sum(1 for a in w if a <= d) < d), None)
        if gap is None:
            return tuple(w)
        w = [a - 1 if a > gap else a for a in w]


def word_shifted_shuffle(u, v) -> LinComb:
    s = len(u)
    v = [a + s for a in v]
    acc = Accumulator()
    n = s + len(v)
    for pos in itertools.combinations(range(n), s):
        w, iu, iv = [], iter(u), iter(v)
        chosen = set(pos)
        for i in range(n):
            w.append(next(iu) if i in chosen else next(iv))
        acc.add_term(tuple(w), 1)
    return acc.result()


def word_deconcatenate(w) -> LinComb:
    acc = Accumulator()
    for k in range(len(w) + 1):
        acc.add_term((park_word(w[:k]), park_word(w[k:])), 1)
    return acc.result()


def check_kvee_pf_words(max_degree: int) -> Report:
    """``K^∨(PF)`` structure constants against the word model."""
    F = fock_kvee(PF)
    rep = Report("kvee-pf-words", F.name, tuple(range(max_degree)))
    for n in range(max_degree + 1):
        for z in F.basis(n):
            rep.cases += 1
            got = F.coproduct(z).map_keys(lambda ab: (pf_to_word(ab[0]), pf_to_word(ab[1])))
            if got != word_deconcatenate(pf_to_word(z)):
                rep.fail(z=z)
                return rep
        for i, j in _degree_pairs(n):
            for x in F.basis(i):
                for y in F.basis(j):
                    rep.cases += 1
                    got = F.product(x, y).map_keys(pf_to_word)
                    if got != word_shifted_shuffle(pf_to_word(x), pf_to_word(y)):
                        rep.fail(x=x, y=y)
                        return rep
    return rep
