#!/usr/bin/env python3
"""Generate the overlay dataset for the distribution-propagation figure.

Thin wrapper over ``cdfpush figure``: iterated pushforward CDFs D0..D4 from
a uniform start at r = 4, together with the uniform (U), two-step
Kumaraswamy (K), and arcsine (B) closed forms, on the standard grid.

Usage:
    python3 scripts/figure_data.py --grid 1024 --out figure_data.csv
"""

from __future__ import annotations

import argparse

from cdfpush import cli


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--grid", type=int, default=1024,
                        help="number of grid intervals (default: 1024)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="output format (default: csv)")
    parser.add_argument("--out", default=None,
                        help="output path (default: stdout)")
    args = parser.parse_args(argv)

    cli_args = ["figure", "--grid", str(args.grid), "--format", args.format]
    if args.out is not None:
        cli_args += ["--out", args.out]
    return cli.main(cli_args)


if __name__ == "__main__":
    raise SystemExit(main())
