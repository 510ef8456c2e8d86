"""Verification suites: axioms, morphisms, ports, Fock images, posets, parkization.

Each suite returns a list of :class:`~hopfspecies.hopf.Report`.  Sizes are
inclusive bounds on ``|I|`` (or on the degree for Fock images).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .core import LinComb, decompositions, subsets
from .fock import (
    SYM,
    FockImage,
    check_cocommutative,
    check_commutative,
    check_graded,
    check_graded_morphism,
    check_kbar_bij_to_sym,
    check_kbar_representatives,
    check_kvee_pf_words,
    fock_dims,
    fock_k,
    fock_kbar,
    fock_kvee,
    indecomposables_dims,
    kbar_bij_to_sym,
)
from .hopf import Report, check_hopf, check_morphism, check_naturality
from .interpolate import FAMILIES, RCHopf, check_interpolation, port, rc_egf
from .monoids import MONOIDS, MORPHISMS
from .monoids.free import BIJ
from .monoids.parking import PF, intersect, is_parking, park
from . import posets, series

LABELS = "abcdefgh"


def label_sets(max_size: int):
    return [frozenset(LABELS[:n]) for n in range(max_size + 1)]


# axioms and morphisms

def axiom_suite(max_size: int = 4, levels=(1, 2, 3, 4)) -> list[Report]:
    reports = []
    for H in MONOIDS.values():
        for I in label_sets(max_size):
            reports.extend(check_hopf(H, I))
    for fam in FAMILIES.values():
        for r in levels:
            H = RCHopf(fam, r)
            for I in label_sets(max_size):
                reports.extend(check_hopf(H, I))
    return reports


def naturality_suite(max_size: int = 3) -> list[Report]:
    reports = []
    monoids = list(MONOIDS.values()) + [RCHopf(f, 2) for f in FAMILIES.values()]
    for H in monoids:
        for I in label_sets(max_size):
            reports.append(check_naturality(H, I))
    return reports


def morphism_suite(max_size: int = 4) -> list[Report]:
    reports = []
    for f in MORPHISMS.values():
        for I in label_sets(max_size):
            reports.append(check_morphism(f, I))
    return reports


def interpolation_suite(max_size: int = 4, r_max: int = 5) -> list[Report]:
    reports = []
    for fam in FAMILIES.values():
        for I in label_sets(max_size):
            reports.extend(check_interpolation(fam, r_max, I))
    return reports


# dimensions

def _dims_report(name: str, got, want) -> Report:
    rep = Report("dimensions", name, tuple(range(len(got))), cases=len(got))
    if list(got) != list(want):
        rep.fail(enumerated=list(got), predicted=list(want))
    return rep


def monoid_series(name: str, N: int):
    """Predicted EGF of each base monoid."""
    return {
        "sigma": series.sigma_series,
        "pi": series.pi_series,
        "bij": series.bij_series,
        "pf": series.parking_series,
        "forest": lambda N: series.ps_exp(series.tree_function(N)),
        "planar-forest": lambda N: series.ps_geom(series.planar_tree_series(N)),
    }[name](N)


def kbar_series(name: str, N: int):
    """Predicted OGF of ``K̄`` where a closed form is available, else ``None``."""
    table = {
        "sigma": series.sigma_ogf,
        "pi": series.ogf_partition_product,
        "bij": series.ogf_partition_product,
        "pf": series.catalan_ogf,
        "planar-forest": series.catalan_ogf,
    }
    return table[name](N) if name in table else None


def dimension_suite(N: int = 7, rc_N: int = 7) -> list[Report]:
    reports = []
    for name, H in MONOIDS.items():
        n_max = {"planar-forest": min(N, 5), "forest": min(N, 6)}.get(name, N)
        got = [len(H.basis(LABELS[:n])) for n in range(n_max + 1)]
        reports.append(_dims_report(name, got, series.integer_counts(monoid_series(name, n_max))))
        ogf = kbar_series(name, n_max)
        if ogf is not None:
            got = fock_dims("Kbar", H, n_max)
            reports.append(_dims_report(f"Kbar({name})", got, series.integer_counts(ogf, egf=False)))
    for fam in FAMILIES.values():
        n_max = min(rc_N, 5) if fam.name == "forest" else rc_N
        for r in (1, 2, 3, 4):
            H = RCHopf(fam, r)
            got = [len(H.basis(LABELS[:n])) for n in range(n_max + 1)]
            reports.append(_dims_report(f"{fam.name}[r={r}]", got,
                                        series.integer_counts(rc_egf(fam, r, n_max))))
    return reports


# Fock images

def fock_suite(max_degree: int = 4) -> list[Report]:
    reports = []
    for H in MONOIDS.values():
        for F in (fock_k(H), fock_kvee(H), fock_kbar(H)):
            reports.extend(check_graded(F, max_degree))
        reports.append(check_kbar_representatives(fock_kbar(H), max_degree))
    reports.append(check_cocommutative(fock_k(PF), max_degree))
    reports.append(check_commutative(fock_kvee(MONOIDS["pi"]), max_degree))
    reports.append(check_kvee_pf_words(min(max_degree, 3)))
    Kb = fock_kbar(MONOIDS["bij"])
    reports.append(check_kbar_bij_to_sym(Kb, max_degree + 1))
    reports.append(check_graded_morphism(Kb, SYM, kbar_bij_to_sym, max_degree, "hbar->d!h"))
    reports.append(check_pf_freeness(max_degree))
    reports.extend(check_fock_ports(max_degree))
    return reports


def check_pf_freeness(max_degree: int) -> Report:
    """Indecomposables of ``K(PF)`` have OGF ``1 - 1/PF~(x)``."""
    N = max_degree
    pf_ogf = series.PowerSeries(tuple((n + 1) ** (n - 1) if n else 1 for n in range(N + 1)))
    gens = series.constant(1, N) - series.ps_inv(pf_ogf)
    want = series.integer_counts(gens, egf=False)[1:]
    got = indecomposables_dims(fock_k(PF), N)
    rep = Report("free-generators", "K(PF)", tuple(range(N)), cases=N)
    if got != want:
        rep.fail(indecomposables=got, predicted=want)
    return rep


def check_fock_ports(max_degree: int, kinds=("K", "Kvee", "Kbar")) -> list[Report]:
    """``K(port^r_s)`` are graded Hopf maps and ``K(port^s_t)∘K(port^r_s) = K(port^r_t)``."""
    reports = []
    for fam in FAMILIES.values():
        for kind in kinds:
            for r, s in ((1, 2), (2, 3), (1, 3)):
                F, G = FockImage(kind, RCHopf(fam, r)), FockImage(kind, RCHopf(fam, s))
                if kind == "Kbar":
                    def f(o, r=r, s=s, G=G):
                        return LinComb.basis(G.project(port(fam, r, s, o.rep)))
                else:
                    def f(u, r=r, s=s):
                        return LinComb.basis(port(fam, r, s, u))
                reports.append(check_graded_morphism(F, G, f, max_degree,
                                                     f"{kind} port^{r}_{s}[{fam.name}]"))
            rep = Report("fock-composition", f"{kind}({fam.name}) 1->2->3",
                         tuple(range(max_degree)))
            F = FockImage(kind, RCHopf(fam, 1))
            G = FockImage(kind, RCHopf(fam, 3))
            for n in range(max_degree + 1):
                for x in F.basis(n):
                    rep.cases += 1
                    u = x.rep if kind == "Kbar" else x
                    two = port(fam, 2, 3, port(fam, 1, 2, u))
                    one = port(fam, 1, 3, u)
                    if kind == "Kbar":
                        two, one = G.project(two), G.project(one)
                    if two != one:
                        rep.fail(x=x)
            reports.append(rep)
    return reports


# posets

def poset_suite(max_size: int = 4) -> list[Report]:
    reports = []
    for I in label_sets(max_size):
        prod = Report("powersum-product", "bij", tuple(sorted(I)))
        cop = Report("powersum-coproduct", "bij", tuple(sorted(I)))
        ideal = Report("ideal-product", "bij", tuple(sorted(I)))
        for S, T in decompositions(I, 2):
            for a in BIJ.basis(S):
                for b in BIJ.basis(T):
                    prod.cases += 1
                    union = BIJ.canon(a + b)
                    if posets.powersum_product(a, b) != LinComb.basis(union):
                        prod.fail(a=a, b=b)
                    ideal.cases += 1
                    if len(posets.lower_ideal(union)) != (len(posets.lower_ideal(a))
                                                          * len(posets.lower_ideal(b))):
                        ideal.fail(a=a, b=b)
            for z in BIJ.basis(I):
                cop.cases += 1
                if posets.powersum_coproduct(S, T, z) != posets.expected_powersum_coproduct(S, T, z):
                    cop.fail(S=S, T=T, z=z)
        dual = Report("powersum-self-dual", "bij", tuple(sorted(I)), cases=1)
        if not posets.is_self_dual(I):
            dual.fail(labels=I)
        reports.extend([prod, cop, ideal, dual])
    return reports


def four_cycle_report(cycle=("a", "d", "c", "b")) -> Report:
    """Rank sizes 1,7,6,1 and Möbius values 1, -1, 2, -6 below a 4-cycle."""
    sigma = (tuple(cycle),)
    rep = Report("four-cycle-ideal", "bij", tuple(sorted(cycle)), cases=1)
    sizes = posets.rank_sizes(sigma)
    values = {}
    for tau, v in posets.mobius_to_top(sigma).items():
        values.setdefault(len(tau), set()).add(v)
    want_values = {1: {1}, 2: {-1}, 3: {2}, 4: {-6}}
    if sizes != [1, 7, 6, 1] or values != want_values:
        rep.fail(rank_sizes=sizes, mobius=values)
    return rep


# parkization

def weak_compositions(max_size: int, max_len: int):
    """Every block-size pattern of size ``≤ max_size`` and length ``≤ max_len``.

    ``park`` only reads block sizes, so one labeling per pattern is exhaustive.
    """
    for length in range(max_len + 1):
        for sizes in itertools.product(range(max_size + 1), repeat=length):
            if sum(sizes) > max_size:
                continue
            labels = iter(LABELS)
            yield tuple(tuple(next(labels) for _ in range(k)) for k in sizes)


def _size(g) -> int:
    return sum(len(b) for b in g)


def check_adding_empty_sets(max_size: int = 4, max_len: int = 6, max_k: int = 3,
                            literal: bool = True) -> Report:
    """``park(Γ) = park(∅^k|Γ) = park(Γ⁽¹⁾|∅^k|Γ⁽²⁾) = park(Γ|∅^k)``.

    ``literal`` uses the stated hypotheses: ``ℓ(Γ) ≥ |Γ|`` and
    ``ℓ(Γ⁽¹⁾) = |Γ⁽¹⁾|``.  Otherwise ``Γ⁽¹⁾`` must be a parking function and
    ``park(Γ)`` must be one too, under which the identity does hold.
    """
    name = "stated hypotheses" if literal else "parking hypotheses"
    rep = Report("adding-empty-sets", name, tuple(range(max_size)))
    for g in weak_compositions(max_size, max_len):
        if len(g) < _size(g):
            continue
        p = park(g)
        if not literal and not is_parking(p):
            continue
        for j in range(len(g) + 1):
            g1, g2 = g[:j], g[j:]
            if literal and len(g1) != _size(g1):
                continue
            if not literal and not is_parking(g1):
                continue
            for k in range(max_k + 1):
                empties = ((),) * k
                rep.cases += 1
                forms = (park(empties + g), park(g1 + empties + g2), park(g + empties))
                if any(f != p for f in forms):
                    rep.fail(gamma=g, gamma1=g1, k=k, park=p, variants=forms)
    return rep


def deleted_blocks(gamma) -> set:
    out, total, kept = set(), 0, 0
    for i, blk in enumerate(gamma):
        if total + len(blk) >= kept + 1:
            total += len(blk)
            kept += 1
        else:
            out.add(i)
    return out


def check_taking_subsets(max_size: int = 4, max_len: int = 6) -> Report:
    """Blocks deleted by ``park(Γ)`` stay deleted for every blockwise subset ``Γ'``."""
    rep = Report("taking-subsets", "park", tuple(range(max_size)))
    for g in weak_compositions(max_size, max_len):
        gone = deleted_blocks(g)
        choices = [[c for k in range(len(b) + 1) for c in itertools.combinations(b, k)]
                   for b in g]
        for sub in itertools.product(*choices):
            rep.cases += 1
            if not gone <= deleted_blocks(sub):
                rep.fail(gamma=g, subset=sub)
    return rep


def check_park_identities(max_size: int = 4) -> list[Report]:
    """Identities behind coassociativity and compatibility of ``PF``, plus closure."""
    one = Report("park-identity-coassoc", "PF", tuple(range(max_size)))
    two = Report("park-identity-compat", "PF", tuple(range(max_size)))
    closed = Report("park-output-parking", "PF", tuple(range(max_size)))
    for I in label_sets(max_size):
        for phi in PF.basis(I):
            for R, S, T in decompositions(I, 3):
                one.cases += 1
                if park(intersect(park(intersect(phi, S | T)), S)) != park(intersect(phi, S)):
                    one.fail(phi=phi, S=S, T=T)
            for S in subsets(I):
                closed.cases += 1
                if not is_parking(park(intersect(phi, S))):
                    closed.fail(phi=phi, S=S)
        for S, T in decompositions(I, 2):
            for Sp, Tp in decompositions(I, 2):
                A, C = S & Sp, T & Sp
                for phi in PF.basis(S):
                    for psi in PF.basis(T):
                        two.cases += 1
                        lhs = park(intersect(phi + psi, Sp))
                        if lhs != park(intersect(phi, A)) + park(intersect(psi, C)):
                            two.fail(phi=phi, psi=psi, S_prime=Sp)
    return [one, two, closed]


def parking_suite(max_size: int = 4) -> list[Report]:
    return ([check_adding_empty_sets(max_size, max_size + 2, 3, literal=False),
             check_taking_subsets(max_size, max_size + 2)]
            + check_park_identities(max_size))


def series_suite(N: int = 8) -> list[Report]:
    rep = Report("series-identity", "1/(1-(e^x-1)) = 1/(2-e^x)", tuple(range(N)), cases=N + 1)
    lhs = series.ps_compose(series.ps_geom(series.variable(N)), series.exp_x(N) - 1)
    if lhs != series.sigma_series(N):
        rep.fail(lhs=lhs, rhs=series.sigma_series(N))
    bpf = Report("series-identity", "block PF = (n-1)^(n-1)", tuple(range(N)), cases=N)
    if series.block_parking_dims(N)[1:] != [(n - 1) ** (n - 1) if n > 1 else 1
                                           for n in range(1, N + 1)]:
        bpf.fail(dims=series.block_parking_dims(N))
    fac = Report("series-identity", "bij = n!", tuple(range(N)), cases=N + 1)
    if series.integer_counts(series.bij_series(N)) != [factorial(n) for n in range(N + 1)]:
        fac.fail()
    return [rep, bpf, fac]


@dataclass(frozen=True)
class BatteryConfig:
    """Bounds for :func:`run_battery`."""

    max_size: int = 4
    r_max: int = 5
    max_degree: int = 4
    dims_up_to: int = 7


SUITES = {
    "axioms": lambda c: axiom_suite(c.max_size),
    "naturality": lambda c: naturality_suite(min(c.max_size, 3)),
    "morphisms": lambda c: morphism_suite(c.max_size),
    "interpolation": lambda c: interpolation_suite(c.max_size, c.r_max),
    "dims": lambda c: dimension_suite(c.dims_up_to, c.dims_up_to),
    "fock": lambda c: fock_suite(c.max_degree),
    "posets": lambda c: poset_suite(c.max_size) + [four_cycle_report()],
    "parking": lambda c: parking_suite(c.max_size),
    "series": lambda c: series_suite(2 * c.max_size),
}

# the literal lemma is known to fail; it is run only on request
EXTRA_SUITES = {
    "park-lemma-literal": lambda c: [check_adding_empty_sets(c.max_size, c.max_size + 2, 3)],
}


def run_battery(config: BatteryConfig = BatteryConfig(), suites=None) -> dict[str, list[Report]]:
    names = list(SUITES) if suites is None else list(suites)
    table = {**SUITES, **EXTRA_SUITES}
    return {name: table[name](config) for name in names}
