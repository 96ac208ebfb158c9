"""Run one or more theorem suites across a range of corpus sizes.

    python3 scripts/run_sweep.py --suites full --sizes 0-4
    python3 scripts/run_sweep.py --suites separation,t_half --sizes 5-7 --count 200 --seed 3 --jobs 4

Sizes up to 4 are exhaustive; larger sizes draw ``--count`` random members.
Prints one text report per (suite, size) and a final tally; exits 1 when any
property failed.
"""

import argparse
import json
import sys
import time

from mtlab.sweep import FAIL, PASS, SUITES, VACUOUS, sweep


def size_range(text: str) -> list[int]:
    lo, _, hi = text.partition("-")
    return list(range(int(lo), int(hi or lo) + 1))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suites", default="full", help=f"comma-separated, from: {', '.join(SUITES)}")
    ap.add_argument("--sizes", default="0-4", type=size_range)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=50)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json", action="store_true", help="emit all reports as one JSON list")
    args = ap.parse_args(argv)

    totals = {PASS: 0, FAIL: 0, VACUOUS: 0}
    reports = []
    for suite in args.suites.split(","):
        for n in args.sizes:
            t0 = time.perf_counter()
            rep = sweep(suite, n, seed=args.seed, count=args.count, jobs=args.jobs)
            for row in rep.rows.values():
                for k in totals:
                    totals[k] += row[k]
            reports.append(rep.to_object())
            if not args.json:
                print(rep.text().rstrip())
                print(f"  ({time.perf_counter() - t0:.1f}s)")
    if args.json:
        print(json.dumps(reports, indent=2, sort_keys=True))
    else:
        print(f"total: pass={totals[PASS]} fail={totals[FAIL]} vacuous={totals[VACUOUS]}")
    return 1 if totals[FAIL] else 0


if __name__ == "__main__":
    sys.exit(main())
