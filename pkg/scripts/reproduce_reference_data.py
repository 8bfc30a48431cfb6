#!/usr/bin/env python3
"""Regenerate all reference figure/table data into results/.

Thin wrapper over the CLI `reproduce` targets; pass --fast for a coarser
grid when iterating on plots.
"""

import argparse
import sys

from tlwaves.cli import main as cli_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="results")
    ap.add_argument("--fast", action="store_true", help="half-size grid (l=64, N=512)")
    args = ap.parse_args()

    argv = ["reproduce", "all", "--out-dir", args.out_dir]
    if args.fast:
        argv += ["--half-length", "64", "--modes", "512"]
    return cli_main(argv)


if __name__ == "__main__":
    sys.exit(main())
