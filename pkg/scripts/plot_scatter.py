#!/usr/bin/env python3
"""Render a cohort scatter CSV (from `durfee cohort --scatter`) as a PNG.

Usage: python scripts/plot_scatter.py scatter.csv out.png [--nonbook]

Plots estimated h (x) against actual h (y) with the y=x diagonal for
reference.  Requires matplotlib.
"""

import argparse
import csv
import sys


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("scatter_csv")
    parser.add_argument("out_png")
    parser.add_argument("--nonbook", action="store_true",
                        help="plot the non-book columns instead of the raw ones")
    args = parser.parse_args()

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib is required for plotting", file=sys.stderr)
        return 1

    xs, ys = [], []
    xcol, ycol = ("estimate_nonbook", "h_nonbook") if args.nonbook else ("estimate", "h")
    with open(args.scatter_csv, encoding="utf-8") as fh:
        for row in csv.DictReader(fh):
            if row[xcol] == "":
                continue
            xs.append(float(row[xcol]))
            ys.append(float(row[ycol]))
    if not xs:
        print("no scatter points found", file=sys.stderr)
        return 1

    fig, ax = plt.subplots(figsize=(7, 7))
    ax.scatter(xs, ys, s=18, alpha=0.8)
    lim = max(max(xs), max(ys)) * 1.05
    ax.plot([0, lim], [0, lim], lw=0.8, color="gray")
    ax.set_xlim(0, lim)
    ax.set_ylim(0, lim)
    ax.set_xlabel("estimated h (rule of thumb)")
    ax.set_ylabel("actual h")
    label = "non-book" if args.nonbook else "raw"
    ax.set_title(f"estimate vs actual h ({label}, {len(xs)} scholars)")
    fig.tight_layout()
    fig.savefig(args.out_png, dpi=150)
    print(f"wrote {args.out_png} ({len(xs)} points)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
