#!/usr/bin/env python3
"""Run the full verification battery and write the aggregate JSON report.

Usage: python scripts/run_report.py [outfile] [--degree N] [--seed S]
"""
import argparse
import json
import sys
import time

from qaw.report import run_battery


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outfile", nargs="?", default="report.json")
    ap.add_argument("--degree", type=int, default=16)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t0 = time.time()
    doc = run_battery(degree=args.degree, seed=args.seed)
    elapsed = time.time() - t0

    with open(args.outfile, "w") as fh:
        json.dump(doc, fh, sort_keys=True, indent=2)
        fh.write("\n")

    s = doc["summary"]
    for c in doc["checks"]:
        if not c["passed"]:
            print(f"FAIL  {c['id']}")
    print(f"{s['passed']}/{s['total']} checks passed in {elapsed:.1f}s -> {args.outfile}")
    return 0 if s["all_passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
