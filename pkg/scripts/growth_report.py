#!/usr/bin/env python3
"""Discontinuity growth and L1 decay along powers, as CSV.

Two kinds of subject show opposite behavior:

  * `generic`: a 3-interval exchange with an irrational length vector whose
    discontinuity count grows by 2 with every power;
  * any named suite pair: its blockwise rotation keeps |disc(r^n)| at most
    twice the block count forever while l1(r^n) dips toward 0 whenever n
    approaches a good rational approximation of the rates.

Columns: n, discontinuities, l1_exact, l1_float.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from fractions import Fraction

from ietrel.iet import Iet, PermLambdaSpec
from ietrel.sampling import demo_suite
from ietrel.scalars import QuadExt


@dataclass(frozen=True)
class Config:
    subject: str
    max_n: int
    output: str | None


def generic_growth_witness() -> Iet:
    """Reversal of three intervals with lengths (sqrt2/4, 1/4, 3/4 - sqrt2/4)."""
    lengths = (
        QuadExt(0, Fraction(1, 4), 2),
        QuadExt(Fraction(1, 4)),
        QuadExt(Fraction(3, 4), -Fraction(1, 4), 2),
    )
    return Iet.from_perm_lambda(PermLambdaSpec(pi=(3, 2, 1), lengths=lengths))


def subject_map(name: str) -> Iet:
    if name == "generic":
        return generic_growth_witness()
    for pair in demo_suite():
        if pair.name == name:
            return pair.r.to_iet()
    names = ", ".join(p.name for p in demo_suite())
    raise SystemExit(f"unknown subject {name!r}; pick 'generic' or one of: {names}")


def parse_config(argv=None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--subject", default="generic",
                        help="'generic' or a suite pair name (default: generic)")
    parser.add_argument("--max-n", type=int, default=50)
    parser.add_argument("-o", "--output", help="CSV path (default: stdout)")
    args = parser.parse_args(argv)
    return Config(subject=args.subject, max_n=args.max_n, output=args.output)


def main(argv=None) -> int:
    cfg = parse_config(argv)
    f = subject_map(cfg.subject)
    sink = open(cfg.output, "w", newline="") if cfg.output else sys.stdout
    try:
        writer = csv.writer(sink)
        writer.writerow(["n", "discontinuities", "l1_exact", "l1_float"])
        cur = f
        for n in range(1, cfg.max_n + 1):
            if n > 1:
                cur = cur.compose(f)
            dist = cur.l1_distance_to_identity()
            writer.writerow([n, len(cur.discontinuities()), str(dist), float(dist)])
    finally:
        if cfg.output:
            sink.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
