#!/usr/bin/env python3
"""Tabulate the fitted Av-embedding constant for every nontrivial standard parahoric."""

import argparse

from dahakit.verify import run_suite


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--types", default="A1,A2")
    args = ap.parse_args()
    report = run_suite("avembed", args.types)
    print(f"{'datum':<12} {'P':<8} {'len':>3} {'coweights':>9} {'pairs':>6}  constant")
    for c in sorted(report.checks, key=lambda c: (c.datum, c.info["max_length"], c.info["P"])):
        i = c.info
        const = "structural" if i["structural"] else i["normalization"]
        status = "" if c.passed else "  MISMATCH " + str(c.counterexample)
        print(f"{c.datum:<12} {','.join(map(str, i['P'])):<8} {i['max_length']:>3} "
              f"{i['coweights']:>9} {c.samples:>6}  {const}{status}")


if __name__ == "__main__":
    main()
