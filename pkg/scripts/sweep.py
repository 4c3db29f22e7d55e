"""Run every verification suite over the catalog and print a per-suite summary.

    python3 scripts/sweep.py [--primes 2 3] [--groups S4 2.S5] [--json out.json]
"""

import argparse
import collections
import json
import time

from psolv import verify


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", nargs="*")
    ap.add_argument("--primes", nargs="*", type=int)
    ap.add_argument("--json", help="write every case to this file")
    args = ap.parse_args()

    t0 = time.perf_counter()
    cases = verify.run("all", args.groups, args.primes)
    elapsed = time.perf_counter() - t0

    tally = collections.Counter()
    failed = collections.Counter()
    for c in cases:
        tally[c.suite] += 1
        failed[c.suite] += not c.passed
    for suite in verify.SUITES:
        print(f"{suite:<10} {tally[suite] - failed[suite]:>5}/{tally[suite]:<5}")
    for c in cases:
        if not c.passed:
            print(c.line())
    print(f"{len(cases)} cases in {elapsed:.1f}s, {sum(failed.values())} failures")

    if args.json:
        with open(args.json, "w") as fh:
            json.dump([c.to_dict() for c in cases], fh, indent=2, sort_keys=True, default=str)
    return 1 if sum(failed.values()) else 0


if __name__ == "__main__":
    raise SystemExit(main())
