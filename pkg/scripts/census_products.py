#!/usr/bin/env python3
"""Count the sequential products on small finite effect algebras.

    python scripts/census_products.py --chains 1 2 3 4 --booleans 1 2 3
    python scripts/census_products.py --file my.ea --show
"""

import argparse
import time

from seacheck import FiniteModel, enumerate_products, load_finite, make_boolean, make_chain
from seacheck.models import format_circ


def bare(model):
    return FiniteModel(model.labels, model.zero, model.one, model.sums, None, name=model.name)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--chains", type=int, nargs="*", default=[1, 2, 3, 4])
    parser.add_argument("--booleans", type=int, nargs="*", default=[1, 2, 3])
    parser.add_argument("--file", action="append", default=[])
    parser.add_argument("--show", action="store_true", help="print every table")
    args = parser.parse_args()

    models = [make_chain(n) for n in args.chains]
    models += [bare(make_boolean(k)) for k in args.booleans]
    models += [bare(load_finite(path)) for path in args.file]
    for ea in models:
        t = time.perf_counter()
        tables = enumerate_products(ea)
        print(f"{ea.name:<16} {len(ea.labels):>2} elements  {len(tables):>3} products  "
              f"{time.perf_counter() - t:.2f}s")
        if args.show:
            for table in tables:
                print("\n".join("  " + line for line in format_circ(ea, table)))


if __name__ == "__main__":
    main()
