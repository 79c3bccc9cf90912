#!/usr/bin/env python3
"""Print the worked identities for the horizontal-sum and E0 models.

    python scripts/reproduce_examples.py --n0 2 3 5 --window 6
"""

import argparse
import time
from fractions import Fraction

from seacheck import (Left, Right, audit_ea, audit_sea, commutes, is_sharp, make_e0,
                      make_horizontal_sum, nat_multiple, uniqueness_search)


def horizontal_sum(n):
    hs = make_horizontal_sum()
    q = Fraction(1, n)
    left, right = Left(q), Right(q)
    print(f"horizontal sum, q = {q}")
    print(f"  {n}*{hs.format(left)} = {hs.format(nat_multiple(hs, left, n))}")
    print(f"  {n}*{hs.format(right)} = {hs.format(nat_multiple(hs, right, n))}")
    print(f"  1 sharp: {is_sharp(hs, hs.one)}, commute: {commutes(hs, left, right)}")


def e0(n0, bound):
    m = make_e0(n0)
    W = m.window(bound)
    t = time.perf_counter()
    report = audit_ea(m, W).merge(audit_sea(m, W))
    print(f"{m.name}, {m.window_descriptor(bound)}: {len(report.violations)} violations, "
          f"{report.checked_tuples} tuples, {time.perf_counter() - t:.2f}s")
    top = m.a(n0, 0)
    print(f"  {m.format(top)} o {m.format(top)} = {m.format(m.circ(top, top))}")
    for case in uniqueness_search(m, n0, m.window(min(bound, 4))):
        if (case.a, case.b) == (m.a(1, 0), m.a(0, 1)):
            print(f"  {n0}*{m.format(case.a)} = {n0}*{m.format(case.b)} = {m.format(case.c)}"
                  f"  sharp={case.c_sharp} commute={case.a_commutes_b}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n0", type=int, nargs="+", default=[2, 3, 5])
    parser.add_argument("--window", type=int, default=6)
    parser.add_argument("--hs-n", type=int, default=4)
    args = parser.parse_args()
    horizontal_sum(args.hs_n)
    for n0 in args.n0:
        e0(n0, args.window)


if __name__ == "__main__":
    main()
