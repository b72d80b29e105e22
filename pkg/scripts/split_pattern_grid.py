#!/usr/bin/env python3
"""Tabulate split_pattern(K, m) against the brute-force rank oracle.

K is the size of a Jordan block of X at a preimage root of multiplicity m;
the table entry is the multiset of Jordan block sizes of f(J_K) at the
target value. Disagreement with the oracle would mean the closed form is
wrong; the exit code reflects that.

Usage: python3 scripts/split_pattern_grid.py [max_K] [max_m]
"""

import sys

from matrange.ranges import split_pattern, split_pattern_oracle


def main():
    max_k = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    max_m = int(sys.argv[2]) if len(sys.argv) > 2 else 8
    mismatches = 0
    header = "K\\m " + " ".join(f"{m:>12}" for m in range(1, max_m + 1))
    print(header)
    for K in range(1, max_k + 1):
        cells = []
        for m in range(1, max_m + 1):
            parts = split_pattern(K, m).parts
            ok = split_pattern_oracle(K, m) == parts
            mismatches += not ok
            cell = "+".join(map(str, parts)) + ("" if ok else "!")
            cells.append(f"{cell:>12}")
        print(f"{K:>3} " + " ".join(cells))
    if mismatches:
        print(f"{mismatches} mismatches against the rank oracle", file=sys.stderr)
        return 1
    print("all entries confirmed by the rank oracle")
    return 0


if __name__ == "__main__":
    sys.exit(main())
