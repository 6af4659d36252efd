#!/usr/bin/env python3
"""Regenerate the frozen scan record under tests/golden/.

The record pins the exact determinants and PSD verdicts of the
periods-[1,1,2], w=1 scan; tests compare fresh runs against it.
"""

import json
import sys
from pathlib import Path

from cfmoments.hankel import scan_kperiodic


def main() -> int:
    report = scan_kperiodic([1, 1, 2], 1, 6)
    payload = {
        "periods": [str(p) for p in report.periods],
        "w": str(report.w),
        "max_order": report.max_order,
        "sequence": [str(s) for s in report.sequence],
        "determinants": [str(d) for d in report.determinants],
        "psd": list(report.psd),
        "first_not_psd": report.first_not_psd,
    }
    target = Path(__file__).resolve().parent.parent / "tests" / "golden"
    target.mkdir(parents=True, exist_ok=True)
    path = target / "kperiodic_112_scan.json"
    path.write_text(json.dumps(payload, indent=2) + "\n")
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
