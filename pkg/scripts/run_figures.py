#!/usr/bin/env python3
"""Regenerate every figure table (fig1..fig9) as CSV + SVG.

Usage:
    python scripts/run_figures.py [--out-dir figures] [--no-svg]
"""

import argparse
import sys
import time

from graspa.cli import main as cli_main
from graspa.experiments import FIGURE_IDS


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="figures")
    parser.add_argument("--no-svg", action="store_true")
    args = parser.parse_args()

    failures = []
    t0 = time.time()
    for fig_id in FIGURE_IDS:
        argv = ["experiment", fig_id, "--out-dir", args.out_dir]
        if not args.no_svg:
            argv.append("--svg")
        t = time.time()
        code = cli_main(argv)
        status = "ok" if code == 0 else f"exit {code}"
        print(f"{fig_id}: {status} ({time.time() - t:.2f}s)")
        if code != 0:
            failures.append(fig_id)
    print(f"done in {time.time() - t0:.1f}s -> {args.out_dir}/")
    if failures:
        print(f"failed: {', '.join(failures)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
