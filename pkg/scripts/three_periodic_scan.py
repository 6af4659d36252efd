#!/usr/bin/env python3
"""Grid experiment: Hankel definiteness of three-periodic truncations.

For periods (a, a, c) with seed w, scans Hankel matrices of the truncation
sequence and tabulates the first order (if any) where positive
semidefiniteness fails.  The diagonal c = a is the two-periodic case in
disguise and is expected to stay PSD; off the diagonal, exact computation
finds negative determinants at small orders.

Usage:
    python scripts/three_periodic_scan.py
    python scripts/three_periodic_scan.py --values 1,3/2,2,3 --w 1 --max-order 6
"""

import argparse
import sys

from cfmoments.exactnum import parse_rational
from cfmoments.hankel import scan_kperiodic


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--values",
        default="1/2,1,3/2,2,3",
        help="comma-separated grid for both a and c (default 1/2,1,3/2,2,3)",
    )
    parser.add_argument("--w", default="1", help="seed value (default 1)")
    parser.add_argument("--max-order", type=int, default=6)
    args = parser.parse_args()

    values = [parse_rational(v) for v in args.values.split(",")]
    w = parse_rational(args.w)

    cell = max(len(str(v)) for v in values) + 2
    header = "a \\ c".ljust(8) + "".join(str(c).rjust(cell) for c in values)
    print(f"first non-PSD Hankel order for periods (a, a, c), w = {w}")
    print(header)
    for a in values:
        row = [str(a).ljust(8)]
        for c in values:
            report = scan_kperiodic([a, a, c], w, args.max_order)
            mark = "-" if report.first_not_psd is None else str(report.first_not_psd)
            row.append(mark.rjust(cell))
        print("".join(row))
    print(f"('-' means PSD through order {args.max_order})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
