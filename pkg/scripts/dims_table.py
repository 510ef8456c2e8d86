"""Dimension table: enumerated counts next to series predictions.

Interpolating families are listed level by level; a row is marked with ``*``
wherever enumeration and prediction disagree.
"""
import argparse

from hopfspecies import series
from hopfspecies.battery import LABELS, kbar_series, monoid_series
from hopfspecies.fock import fock_dims
from hopfspecies.interpolate import FAMILIES, RCHopf, rc_egf
from hopfspecies.monoids import MONOIDS

CAPS = {"planar-forest": 5, "forest": 6}


def row(name, got, want):
    flag = "" if want is None or got == want else " *"
    print(f"{name:<22} {' '.join(f'{v:>6}' for v in got)}{flag}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("-n", type=int, default=6)
    ap.add_argument("--levels", type=int, default=4)
    args = ap.parse_args()

    for name, H in MONOIDS.items():
        n = min(args.n, CAPS.get(name, args.n))
        got = [len(H.basis(LABELS[:k])) for k in range(n + 1)]
        row(name, got, series.integer_counts(monoid_series(name, n)))
        ogf = kbar_series(name, n)
        got = fock_dims("Kbar", H, n)
        row(f"Kbar({name})", got, None if ogf is None else series.integer_counts(ogf, egf=False))
    for fam in FAMILIES.values():
        n = min(args.n, 5) if fam.name == "forest" else args.n
        for r in range(1, args.levels + 1):
            H = RCHopf(fam, r)
            got = [len(H.basis(LABELS[:k])) for k in range(n + 1)]
            row(H.name, got, series.integer_counts(rc_egf(fam, r, n)))


if __name__ == "__main__":
    main()
