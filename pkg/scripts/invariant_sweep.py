#!/usr/bin/env python3
"""Run the cross-module invariant battery at a configurable size cap and
report per-check timing.  A heavier, scriptable version of
`tcalab selftest` for sweeping larger caps than the default.

Usage: python scripts/invariant_sweep.py [--size N]
"""

import argparse
import sys
import time

from tcalab.selftest import CHECKS


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=6)
    args = ap.parse_args()

    failures = []
    for name, fn in CHECKS:
        start = time.perf_counter()
        msg = fn(args.size)
        elapsed = time.perf_counter() - start
        status = "ok" if msg is None else f"FAIL: {msg}"
        print(f"{name:28s} {elapsed:7.2f}s  {status}")
        if msg is not None:
            failures.append(msg)
    return 3 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
