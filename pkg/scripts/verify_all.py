#!/usr/bin/env python3
"""Run every exhaustive verification at full desk scale and print a summary.

Exit status is 0 only if all checks pass. Expect a couple of minutes on a
laptop; --workers spreads the enumeration across processes.
"""

import argparse
import sys
import time

from ccmax import (
    verify_caveman_rewire,
    verify_theorem1,
    verify_theorem23,
    verify_theorem4,
)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    jobs = []
    for n in (6, 8, 10, 12):
        jobs.append(lambda n=n: verify_theorem1(3, n, workers=args.workers))
    for n in (6, 7, 8, 9, 10):
        jobs.append(lambda n=n: verify_theorem23(n, workers=args.workers))
    for n in (3, 4, 5, 6, 7):
        jobs.append(lambda n=n: verify_theorem4(n, workers=args.workers))
    for k in (3, 4, 5, 6):
        for length in (2, 3, 4):
            jobs.append(
                lambda k=k, length=length: verify_caveman_rewire(k, length)
            )

    all_ok = True
    t0 = time.perf_counter()
    for job in jobs:
        report = job()
        all_ok &= report.passed
        for line in report.summary_lines():
            print(line)
    print(f"total: {time.perf_counter() - t0:.1f}s, {'PASS' if all_ok else 'FAIL'}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
