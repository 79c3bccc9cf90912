"""Enumerate every sequential product on a small finite effect algebra.

Cells of the product table are assigned depth first in row-major order.  The
rows of 0 and 1 and the columns of 0 and 1 are fixed up front
(``1 o x = x``, ``0 o x = x o 0 = 0``, ``x o 1 = x``); after each assignment
every axiom instance whose cells are all filled is checked.  Complete tables
are re-validated by :func:`seacheck.sequential.audit_sea` before they are
returned.
"""

from __future__ import annotations

import itertools
from typing import Optional

from .core import FiniteModel, ModelError, audit_ea
from .sequential import audit_sea

MAX_CARRIER = 8


def _violates(ea: FiniteModel, table, supp, orth) -> bool:
    els = range(len(table))
    add = ea.oplus
    zero = ea.zero

    # SEA1: a o (b (+) c) = a o b (+) a o c, and the right side must exist
    for a in els:
        row = table[a]
        for b, c, s in orth:
            ab, ac = row[b], row[c]
            if ab is None or ac is None:
                continue
            r = add(ab, ac)
            if r is None:
                return True
            lhs = row[s]
            if lhs is not None and lhs != r:
                return True

    commuting = []
    for a in els:
        for b in els:
            ab, ba = table[a][b], table[b][a]
            if ab is None or ba is None:
                continue
            if ab == zero and ba != zero:
                return True
            if ab == ba:
                commuting.append((a, b))

    for a, b in commuting:
        bs = supp[b]
        x, y = table[a][bs], table[bs][a]
        if x is not None and y is not None and x != y:
            return True
        ab = table[a][b]
        for c in els:
            bc = table[b][c]
            if bc is None:
                continue
            lhs, rhs = table[a][bc], table[ab][c]
            if lhs is not None and rhs is not None and lhs != rhs:
                return True

    partners = {c: [x for (y, x) in commuting if y == c] for c in els}
    for c in els:
        for a, b in itertools.product(partners[c], repeat=2):
            ab = table[a][b]
            if ab is not None:
                lhs, rhs = table[c][ab], table[ab][c]
                if lhs is not None and rhs is not None and lhs != rhs:
                    return True
            s = add(a, b)
            if s is not None:
                lhs, rhs = table[c][s], table[s][c]
                if lhs is not None and rhs is not None and lhs != rhs:
                    return True
    return False


def enumerate_products(ea: FiniteModel, max_solutions: Optional[int] = None) -> list:
    """All product tables turning ``ea`` into a sequential effect algebra.

    Tables are tuples of rows of element indices, in lexicographic order.
    At most ``max_solutions`` are returned when given.
    """
    if not ea.finite:
        raise ModelError("product search needs a finite model")
    size = len(ea.elements())
    if size > MAX_CARRIER:
        raise ModelError(f"carrier too large for product search ({size} > {MAX_CARRIER})")
    bare = FiniteModel(ea.labels, ea.zero, ea.one, ea.sums, None, name=ea.name)
    ea_report = audit_ea(bare)
    if not ea_report.ok:
        raise ModelError(f"{ea.name} fails the effect-algebra audit "
                         f"({len(ea_report.violations)} violations)")

    els = range(size)
    zero, one = ea.zero, ea.one
    supp = {a: ea.supplement(a) for a in els}
    orth = [(b, c, s) for b in els for c in els if (s := ea.oplus(b, c)) is not None]

    table = [[None] * size for _ in els]
    for x in els:
        table[one][x] = x
        table[x][one] = x
        table[zero][x] = zero
        table[x][zero] = zero
    free = [(i, j) for i in els for j in els if table[i][j] is None]

    solutions = []

    def descend(k: int) -> bool:
        if k == len(free):
            candidate = tuple(tuple(row) for row in table)
            if audit_sea(bare.with_product(candidate), fail_fast=True).ok:
                solutions.append(candidate)
            return max_solutions is not None and len(solutions) >= max_solutions
        i, j = free[k]
        for value in els:
            table[i][j] = value
            if not _violates(ea, table, supp, orth) and descend(k + 1):
                table[i][j] = None
                return True
        table[i][j] = None
        return False

    if not _violates(ea, table, supp, orth):
        descend(0)
    return solutions
