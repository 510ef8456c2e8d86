"""Run the verification battery and print one line per report.

    python3 scripts/run_battery.py --max-size 4
    python3 scripts/run_battery.py --suite parking --suite park-lemma-literal
"""
import argparse
import sys
import time
from dataclasses import asdict

from hopfspecies.battery import EXTRA_SUITES, SUITES, BatteryConfig, run_battery


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--r-max", type=int, default=5)
    ap.add_argument("--max-degree", type=int, default=4)
    ap.add_argument("--dims-up-to", type=int, default=7)
    ap.add_argument("--suite", action="append", choices=sorted({**SUITES, **EXTRA_SUITES}))
    ap.add_argument("--quiet", action="store_true", help="only print failures and totals")
    args = ap.parse_args(argv)

    config = BatteryConfig(args.max_size, args.r_max, args.max_degree, args.dims_up_to)
    print("config:", asdict(config))
    failed = 0
    for name in args.suite or list(SUITES):
        t0 = time.perf_counter()
        reports = run_battery(config, [name])[name]
        bad = [r for r in reports if not r.ok]
        failed += len(bad)
        for rep in reports:
            if not args.quiet or not rep.ok:
                print(f"  [{name}] {rep.line()}")
        for rep in bad:
            print(f"    counterexample: {rep.counterexample}")
        print(f"{name}: {len(reports) - len(bad)}/{len(reports)} passed "
              f"in {time.perf_counter() - t0:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
