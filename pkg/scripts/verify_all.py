#!/usr/bin/env python3
"""Run the whole closed-form catalog against brute force and summarize.

Every catalogued theorem case with group order up to --max-order is
re-derived from an explicit Cayley table: build the group, build the graph,
take the exact characteristic polynomial, and compare with the closed form.
One JSON line per case goes to --output (same schema as ``pgspectra verify``);
a per-theorem summary lands on stdout.  Exit code 2 if anything is falsified.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from pathlib import Path

from pgspectra import THEOREM_IDS, verify_sweep


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-order", type=int, default=64, help="largest group order to enumerate")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes")
    ap.add_argument("--output", type=Path, default=Path("verification.jsonl"))
    args = ap.parse_args(argv)

    t0 = time.perf_counter()
    reports = verify_sweep(max_order=args.max_order, jobs=args.jobs)
    wall = time.perf_counter() - t0

    with args.output.open("w", encoding="utf-8") as fh:
        for r in reports:
            fh.write(json.dumps(r.to_json_obj()) + "\n")

    counts: Counter[str] = Counter(r.case.theorem_id for r in reports)
    falsified = [r for r in reports if r.equal is False]
    informational = sum(1 for r in reports if r.equal is None)

    width = max(len(t) for t in THEOREM_IDS)
    for tid in THEOREM_IDS:
        print(f"{tid:<{width}}  {counts.get(tid, 0):3d} case(s)")
    print()
    print(f"{len(reports)} cases in {wall:.1f} s -> {args.output}")
    print(f"{len(falsified)} falsified, {informational} informational")
    for r in falsified:
        print(f"  FAIL {r.case.describe()}: {r.note}")
    return 2 if falsified else 0


if __name__ == "__main__":
    sys.exit(main())
