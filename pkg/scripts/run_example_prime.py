#!/usr/bin/env python3
"""Full verification run at a single prime.

Builds the trace table, checks the exact moment identities, evaluates all
four discrepancy statistics on a uniform grid, and writes the reports plus a
histogram SVG next to each other. The default prime is the 93283 showcase;
expect the table build to dominate the runtime (quadratic in p).

Usage:
    python scripts/run_example_prime.py [--p 93283] [--grid 60] [--bins 61]
                                        [--threads N] [--out-dir out]
"""

import argparse
import os
import sys
import time
from pathlib import Path

from k3batman import (
    build_hurwitz_table,
    build_trace_table,
    discrepancy_report,
    make_context,
    moment,
    moment_rhs,
    uniform_grid,
)
from k3batman.stats import STATISTICS
from k3batman.svg import HistogramSpec, render_histogram


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=93283)
    parser.add_argument("--grid", type=int, default=60)
    parser.add_argument("--bins", type=int, default=61)
    parser.add_argument("--nmax", type=int, default=3)
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    parser.add_argument("--out-dir", default="out")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    t0 = time.time()
    ctx = make_context(args.p)
    table = build_trace_table(ctx, workers=args.threads)
    print(f"trace table for p={args.p}: {len(table)} entries "
          f"in {time.time() - t0:.1f} s on {args.threads} workers")

    t0 = time.time()
    htable = build_hurwitz_table(4 * args.p)
    ok = True
    for n in range(1, args.nmax + 1):
        for twisted in (False, True):
            lhs = moment(table, n, twisted)
            good = lhs == moment_rhs(htable, args.p, n, twisted)
            ok &= good
            kind = "twisted" if twisted else "untwisted"
            print(f"moment n={n} {kind}: {'exact match' if good else 'MISMATCH'}")
    print(f"moment identities checked in {time.time() - t0:.1f} s")

    for which in STATISTICS:
        span = (-3, 3) if which == "batman" else (0, 1)
        report = discrepancy_report(table, uniform_grid(*span, args.grid), which)
        ok &= report.all_pass
        print(f"{which}: max_gap {report.max_gap:.5f} vs bound "
              f"{report.rows[0].bound:.4f} -> "
              f"{'all pass' if report.all_pass else 'BOUND EXCEEDED'}")
        csv = out_dir / f"report_{args.p}_{which}.csv"
        rows = ["lo,hi,empirical,target,gap,bound,pass"]
        rows += [
            f"{float(r.lo)!r},{float(r.hi)!r},{float(r.empirical)!r},"
            f"{r.target!r},{r.gap!r},{r.bound!r},{'true' if r.passed else 'false'}"
            for r in report.rows
        ]
        csv.write_text("\n".join(rows) + "\n")

    svg_path = out_dir / f"hist_{args.p}.svg"
    svg_path.write_text(
        render_histogram(table, HistogramSpec(args.p, args.bins, overlay=True))
    )
    print(f"reports and histogram written under {out_dir}/")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
