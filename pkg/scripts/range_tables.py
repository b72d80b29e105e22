#!/usr/bin/env python3
"""Print, for a few representative functions, which Jordan-structure
partitions at each totally ramified value are unreachable in each dimension.

Usage: python3 scripts/range_tables.py [max_n]
"""

import sys

from matrange.functions import polynomial_function, sin_family
from matrange.polynomials import Poly
from matrange.ranges import describe_range
from matrange.scalars import render_scalar


def show(name, f, max_n):
    print(f"== {name} ==")
    for n in range(1, max_n + 1):
        desc = describe_range(f, n)
        if not desc.uncoverable:
            print(f"  n={n}: case {desc.theorem_case.value}, full range")
            continue
        for value, bad in desc.uncoverable:
            rendered = ", ".join("{" + ",".join(map(str, p)) + "}" for p in bad) or "none"
            print(
                f"  n={n}: case {desc.theorem_case.value}, "
                f"unreachable at {render_scalar(value)}: {rendered}"
            )
    print()


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    show("z^2", polynomial_function(Poly.monomial(2)), max_n)
    show("z^3", polynomial_function(Poly.monomial(3)), max_n)
    show("z^2 (z-1)^2 + 1", polynomial_function((Poly.monomial(1) * Poly([-1, 1])) ** 2 + Poly.constant(1)), max_n)
    show("sine family (values 0 and 1)", sin_family(0, 1, 1, 0), max_n)


if __name__ == "__main__":
    main()
