#!/usr/bin/env python3
"""Run the nine acceptance criteria and print one pass/fail line each.

Exit status is 0 only if every criterion passes within its time budget.
"""

import argparse
import sys

from dahakit.acceptance import CRITERIA, evaluate
from dahakit.verify import DEFAULT_SEED, SuiteConfig


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", type=int, nargs="*", help="criterion numbers to run")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = ap.parse_args()
    config = SuiteConfig(seed=args.seed)
    ok = True
    for c in CRITERIA:
        if args.only and c.number not in args.only:
            continue
        out = evaluate(c, config)
        print(out.line(), flush=True)
        ok &= out.passed
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
