#!/usr/bin/env python3
"""Run the full verification checklist over a matrix of (type, colors).

Prints one row per (root system, m) with the outcome of every check the
``verify-all`` pipeline runs, and exits nonzero if anything fails.
"""
import argparse
import sys

from clustercomplexes.cli import RunConfig, cmd_verify_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--types", nargs="+",
                    default=["A2", "A3", "B2", "B3", "G2"])
    ap.add_argument("--colors", nargs="+", type=int, default=[1, 2, 3])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    worst = 0
    for label in args.types:
        for m in args.colors:
            print("=== %s, m=%d ===" % (label, m))
            cfg = RunConfig(phi=label, m=m, seed=args.seed,
                            workers=args.workers, command="verify-all")
            code = cmd_verify_all(cfg)
            worst = max(worst, code)
    print("overall:", "PASS" if worst == 0 else "FAIL")
    return worst


if __name__ == "__main__":
    sys.exit(main())
