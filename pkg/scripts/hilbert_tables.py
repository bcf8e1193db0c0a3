#!/usr/bin/env python3
"""Print Hilbert series tables for the wonderful compactifications.

Usage:
    python scripts/hilbert_tables.py [--max-n 8] [--target {complex,real,both}]

For each family (paths, cycles, complete, stars) the table lists the
coefficient polynomials of the compactification Hilbert series, assembled
from the convolution recurrences and cross-checked against the closed forms.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from contractads.family_series import closed_form, family_series
from contractads.graphic_functions import wonderful_complex_gf, wonderful_real_gf


def print_table(target: str, max_n: int) -> None:
    fn = wonderful_complex_gf() if target == "complex" else wonderful_real_gf()
    print(f"=== {target} wonderful compactification, families up to n = {max_n} ===")
    for family in ("P", "C", "K", "St"):
        assembled = family_series(fn, family, max_n)
        closed = closed_form(target, family, max_n)
        tag = "ok" if assembled.series == closed else "MISMATCH"
        print(f"-- family {family} (closed form check: {tag})")
        start = 0 if family == "St" else 1
        for n in range(start, max_n + 1):
            print(f"   {family}_{n}: {assembled.member_value(n)}")
    print()


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--target", choices=["complex", "real", "both"], default="both")
    args = parser.parse_args()
    targets = ["complex", "real"] if args.target == "both" else [args.target]
    for target in targets:
        print_table(target, args.max_n)
    return 0


if __name__ == "__main__":
    sys.exit(main())
