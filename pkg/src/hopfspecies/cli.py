"""Command-line interface.

Exit codes: 0 on success (or a passing check), 1 when a check or a
dimension comparison fails, 2 on malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import posets, series
from .battery import (
    EXTRA_SUITES,
    SUITES,
    BatteryConfig,
    kbar_series,
    monoid_series,
    run_battery,
)
from .core import LinComb
from .fock import KINDS, FockImage
from .hopf import HopfMonoid, antipode
from .interpolate import (
    FAMILIES,
    RCHopf,
    decode_interp,
    port,
    port_from_b,
    port_infinity,
)
from .monoids import MONOIDS
from .monoids.encoding import EncodingError
from .monoids.free import BIJ
from .monoids.parking import decode_weak_composition, format_trace, park, park_trace


class InputError(Exception):
    pass


def coeff_text(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def parse_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: {exc.msg} at line {exc.lineno} column {exc.colno} "
                         f"(char {exc.pos})") from None


def decode(H: HopfMonoid, text: str, what: str):
    obj = parse_json(text, what)
    try:
        return H.decode(obj, "$")
    except (ValueError, TypeError, KeyError, IndexError) as exc:
        raise InputError(f"{what}: {exc}") from None


def resolve_monoid(args) -> HopfMonoid:
    if getattr(args, "family", None):
        r = args.r if args.r is not None else 1
        if r < 1:
            raise InputError("-r must be at least 1")
        return RCHopf(FAMILIES[args.family], r)
    return MONOIDS[args.monoid or "sigma"]


def _signed_terms(pieces) -> str:
    out = ""
    for c, body in pieces:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        text = body if mag == 1 else f"{mag}·{body}"
        out += (f"-{text}" if sign == "-" else text) if not out else f" {sign} {text}"
    return out or "0"


def pretty_lincomb(H, X: LinComb, tensor: bool = False) -> str:
    pieces = []
    for key, c in X.sorted_items():
        body = f"{H.pretty(key[0])} ⊗ {H.pretty(key[1])}" if tensor else H.pretty(key)
        pieces.append((c, body))
    return _signed_terms(pieces)


def terms_json(H, X: LinComb, tensor: bool = False) -> list:
    out = []
    for key, c in X.sorted_items():
        basis = [H.encode(key[0]), H.encode(key[1])] if tensor else H.encode(key)
        out.append({"basis": basis, "coeff": coeff_text(c)})
    return out


class Output:
    def __init__(self, fmt: str):
        self.fmt = fmt
        self.lines: list[str] = []
        self.payload: dict = {}

    def emit(self) -> str:
        if self.fmt == "json":
            return json.dumps(self.payload, ensure_ascii=False, indent=None)
        return "\n".join(self.lines)


# subcommands

def cmd_dims(args, out: Output) -> int:
    n = args.n
    degrees = list(range(n + 1)) if args.upto else [n]
    if args.family:
        fam = FAMILIES[args.family]
        r = args.r or 1
        H = RCHopf(fam, r)
        enumerated = [len(H.basis(range(1, k + 1))) for k in range(n + 1)]
        from .interpolate import rc_egf

        predicted = series.integer_counts(rc_egf(fam, r, n))
        label = f"{fam.name} r={r}"
    else:
        name = args.monoid or "sigma"
        H = MONOIDS[name]
        kind = args.fock
        if kind:
            F = FockImage(kind, H)
            enumerated = [len(F.basis(k)) for k in range(n + 1)]
            if kind == "Kbar":
                ogf = kbar_series(name, n)
                predicted = None if ogf is None else series.integer_counts(ogf, egf=False)
            else:
                predicted = series.integer_counts(monoid_series(name, n))
            label = f"{kind}({name})"
        else:
            enumerated = [len(H.basis(range(1, k + 1))) for k in range(n + 1)]
            predicted = series.integer_counts(monoid_series(name, n))
            label = name
    match = predicted is None or all(enumerated[k] == predicted[k] for k in degrees)
    for k in degrees:
        pred = "n/a" if predicted is None else predicted[k]
        flag = "" if predicted is None or enumerated[k] == pred else "  MISMATCH"
        out.lines.append(f"{label} n={k}: enumerated {enumerated[k]}, predicted {pred}{flag}")
    out.payload = {
        "input": {"what": label, "n": n},
        "output": {"degrees": degrees,
                   "enumerated": [enumerated[k] for k in degrees],
                   "predicted": None if predicted is None else [predicted[k] for k in degrees],
                   "match": match},
    }
    return 0 if match else 1


def cmd_mu(args, out: Output) -> int:
    H = resolve_monoid(args)
    x, y = decode(H, args.x, "x"), decode(H, args.y, "y")
    if H.support(x) & H.support(y):
        raise InputError("x and y must have disjoint label sets")
    res = H.mu(x, y)
    out.lines.append(pretty_lincomb(H, res))
    out.payload = {"input": [H.encode(x), H.encode(y)], "output": terms_json(H, res),
                   "terms": terms_json(H, res)}
    return 0


def cmd_delta(args, out: Output) -> int:
    H = resolve_monoid(args)
    x = decode(H, args.x, "x")
    left = parse_json(args.left, "--left")
    if not isinstance(left, list):
        raise InputError("--left: expected an array of labels")
    sup = H.support(x)
    try:
        S = frozenset(left)
    except TypeError:
        raise InputError("--left: labels must be strings or integers") from None
    if not S <= sup:
        raise InputError(f"--left: labels {sorted(map(str, S - sup))} are not in the support")
    res = H.delta(S, sup - S, x)
    out.lines.append(pretty_lincomb(H, res, tensor=True))
    terms = terms_json(H, res, tensor=True)
    out.payload = {"input": {"x": H.encode(x), "left": sorted(S)}, "output": terms,
                   "terms": terms}
    return 0


def cmd_antipode(args, out: Output) -> int:
    H = resolve_monoid(args)
    x = decode(H, args.x, "x")
    res = antipode(H, x)
    out.lines.append(pretty_lincomb(H, res))
    terms = terms_json(H, res)
    out.payload = {"input": H.encode(x), "output": terms, "terms": terms}
    return 0


def cmd_park(args, out: Output) -> int:
    obj = parse_json(args.gamma, "gamma")
    try:
        gamma = decode_weak_composition(obj)
    except (ValueError, TypeError) as exc:
        raise InputError(f"gamma: {exc}") from None
    phi = park(gamma)
    encoded = [list(b) for b in phi]
    if args.trace:
        out.lines.extend(format_trace(park_trace(gamma)))
    out.lines.append(json.dumps(encoded, ensure_ascii=False))
    out.payload = {"input": obj, "output": encoded}
    if args.trace:
        out.payload["trace"] = [
            {"phi": [list(b) for b in row.phi], "remaining": [list(b) for b in row.remaining],
             "kept": row.kept} for row in park_trace(gamma)]
    return 0


def cmd_port(args, out: Output) -> int:
    fam = FAMILIES[args.family]
    r = args.r or 1
    if args.from_b:
        x = decode(fam.b, args.x, "x")
        res = port_from_b(fam, r, x)
        H = RCHopf(fam, r)
        out.lines.append(H.pretty(res))
        out.payload = {"input": fam.b.encode(x), "output": H.encode(res)}
        return 0
    obj = parse_json(args.x, "x")
    try:
        u = decode_interp(fam, obj, "$", r=r)
    except (ValueError, TypeError) as exc:
        raise InputError(f"x: {exc}") from None
    if args.infinity:
        res = port_infinity(fam, r, u)
        out.lines.append(fam.d.pretty(res))
        out.payload = {"input": obj, "output": fam.d.encode(res)}
        return 0
    if args.s is None:
        raise InputError("port needs -s, --infinity or --from-b")
    if args.s <= r:
        raise InputError(f"port needs r < s (got r={r}, s={args.s})")
    res = port(fam, r, args.s, u)
    H = RCHopf(fam, args.s)
    out.lines.append(H.pretty(res))
    out.payload = {"input": obj, "output": H.encode(res)}
    return 0


def _bijection(text: str, what: str):
    return decode(BIJ, text, what)


def cmd_mobius(args, out: Output) -> int:
    sigma = _bijection(args.sigma, "--sigma")
    if args.tau is None:
        values = posets.mobius_to_top(sigma)
        edges = posets.hasse_edges(sigma)
        for tau, v in values.items():
            out.lines.append(f"{BIJ.pretty(tau)}  {v}")
        out.payload = {
            "input": BIJ.encode(sigma),
            "output": [{"basis": BIJ.encode(t), "mobius": coeff_text(v)} for t, v in values.items()],
            "hasse": [[BIJ.encode(a), BIJ.encode(b)] for a, b in edges],
        }
        return 0
    if args.tau == "bottom":
        tau = posets.bottom(posets.support(sigma))
    else:
        tau = _bijection(args.tau, "--tau")
    try:
        v = posets.mobius(tau, sigma)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out.lines.append(str(v))
    out.payload = {"input": {"sigma": BIJ.encode(sigma), "tau": BIJ.encode(tau)},
                   "output": coeff_text(v)}
    return 0


def cmd_powersum(args, out: Output) -> int:
    sigma = _bijection(args.sigma, "--sigma")
    res = posets.to_powersum(LinComb.basis(sigma)) if args.to_powersum else posets.powersum(sigma)
    text = pretty_lincomb(BIJ, res)
    if args.to_powersum:
        text = _signed_terms([(c, f"p[{BIJ.pretty(k)}]") for k, c in res.sorted_items()])
    out.lines.append(text)
    terms = terms_json(BIJ, res)
    out.payload = {"input": BIJ.encode(sigma), "output": terms, "terms": terms}
    return 0


def cmd_fock(args, out: Output) -> int:
    H = resolve_monoid(args)
    F = FockImage(args.kind, H)
    bases = {k: F.basis(k) for k in range(args.n + 1)}
    index = {k: {x: i for i, x in enumerate(b)} for k, b in bases.items()}
    product, coproduct = [], []
    for n in range(args.n + 1):
        for i in range(n + 1):
            j = n - i
            for a, x in enumerate(bases[i]):
                for b, y in enumerate(bases[j]):
                    for z, c in F.product(x, y).sorted_items():
                        product.append({"degrees": [i, j], "left": a, "right": b,
                                        "result": index[n][z], "coeff": coeff_text(c)})
        for c_idx, z in enumerate(bases[n]):
            for (x, y), c in F.coproduct(z).sorted_items():
                i, j = F.degree(x), F.degree(y)
                coproduct.append({"degrees": [i, j], "input": c_idx, "left": index[i][x],
                                  "right": index[j][y], "coeff": coeff_text(c)})
    out.payload = {
        "input": {"kind": args.kind, "monoid": H.name, "n": args.n},
        "output": {"basis": {str(k): [F.encode(x) for x in b] for k, b in bases.items()},
                   "product": product, "coproduct": coproduct},
    }
    out.lines.append(f"{F.name} through degree {args.n}")
    for k, b in bases.items():
        out.lines.append(f"degree {k}: " + ", ".join(f"[{i}] {F.pretty(x)}" for i, x in enumerate(b)))
    for e in product:
        i, j = e["degrees"]
        out.lines.append(f"mu  ({i}:{e['left']}) * ({j}:{e['right']}) -> "
                         f"({i + j}:{e['result']}) coeff {e['coeff']}")
    for e in coproduct:
        i, j = e["degrees"]
        out.lines.append(f"del ({i + j}:{e['input']}) -> ({i}:{e['left']}) ⊗ "
                         f"({j}:{e['right']}) coeff {e['coeff']}")
    return 0


def cmd_check(args, out: Output) -> int:
    if not args.all and not args.suite:
        raise InputError("check needs --all or at least one --suite")
    config = BatteryConfig(max_size=args.max_size, r_max=args.r_max,
                           max_degree=args.max_degree if args.max_degree is not None
                           else args.max_size,
                           dims_up_to=args.dims_up_to)
    names = list(SUITES) if args.all else args.suite
    results = run_battery(config, names)
    ok = True
    report_rows = []
    for name, reports in results.items():
        for rep in reports:
            ok &= rep.ok
            line = f"[{name}] {rep.line()}"
            if not rep.ok:
                line += f"  counterexample: {rep.counterexample}"
            out.lines.append(line)
            report_rows.append({"suite": name, "check": rep.check, "monoid": rep.monoid,
                                "size": len(rep.labels), "ok": rep.ok, "cases": rep.cases,
                                "counterexample": None if rep.ok else repr(rep.counterexample)})
    total = len(report_rows)
    failed = sum(1 for r in report_rows if not r["ok"])
    out.lines.append(f"{total - failed}/{total} checks passed")
    out.payload = {"input": {"suites": names, "max_size": args.max_size},
                   "output": report_rows}
    return 0 if ok else 1


# parser

def _add_monoid_args(p):
    p.add_argument("--monoid", choices=sorted(MONOIDS), help="base Hopf monoid")
    p.add_argument("--family", choices=sorted(FAMILIES),
                   help="interpolating family; use with -r")
    p.add_argument("-r", type=int, help="level of the interpolating family")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(prog="hopfspecies",
                                     description="Hopf monoids in species, exactly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", parents=[common], help="enumerated vs predicted dimensions")
    _add_monoid_args(p)
    p.add_argument("--fock", choices=KINDS, help="dimensions of a Fock image of --monoid")
    p.add_argument("-n", type=int, default=5)
    p.add_argument("--upto", action="store_true", help="report every degree 0..n")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("mu", parents=[common], help="product of two structures")
    _add_monoid_args(p)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("delta", parents=[common], help="coproduct along (left, rest)")
    _add_monoid_args(p)
    p.add_argument("x")
    p.add_argument("--left", "-S", required=True, help="JSON array of labels in S")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("antipode", parents=[common], help="antipode of a structure")
    _add_monoid_args(p)
    p.add_argument("x")
    p.set_defaults(func=cmd_antipode)

    p = sub.add_parser("park", parents=[common], help="parkization of a weak composition")
    p.add_argument("gamma")
    p.add_argument("--trace", action="store_true", help="print every keep/discard step")
    p.set_defaults(func=cmd_park)

    p = sub.add_parser("port", parents=[common], help="carry an element between levels")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("-r", type=int, default=1)
    p.add_argument("-s", type=int)
    p.add_argument("--infinity", action="store_true", help="apply the stable map to d")
    p.add_argument("--from-b", action="store_true",
                   help="x is a structure of b; map it to level r")
    p.add_argument("x")
    p.set_defaults(func=cmd_port)

    p = sub.add_parser("mobius", parents=[common], help="Möbius values in the restriction order")
    p.add_argument("--sigma", required=True)
    p.add_argument("--tau", help="a bijection below sigma, or 'bottom'")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("powersum", parents=[common], help="powersum basis of bij")
    p.add_argument("--sigma", required=True)
    p.add_argument("--to-powersum", action="store_true",
                   help="expand sigma in the powersum basis instead")
    p.set_defaults(func=cmd_powersum)

    p = sub.add_parser("fock", parents=[common], help="structure constants of a Fock image")
    _add_monoid_args(p)
    p.add_argument("--kind", choices=KINDS, default="K")
    p.add_argument("-n", type=int, default=2)
    p.set_defaults(func=cmd_fock)

    p = sub.add_parser("check", parents=[common], help="run verification suites")
    p.add_argument("--all", action="store_true")
    p.add_argument("--suite", action="append", choices=sorted({**SUITES, **EXTRA_SUITES}))
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--r-max", type=int, default=5)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--dims-up-to", type=int, default=7)
    p.set_defaults(func=cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.format)
    try:
        code = args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out.emit() + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
