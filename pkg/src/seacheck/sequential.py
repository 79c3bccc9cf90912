"""Sequential product layer: SEA1-SEA5, sharpness, independence, multiples."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .core import (AlgebraModel, AuditReport, SupplementError, Violation,
                   _differences, leq, resolve_window)

SEA_AXIOMS = ("SEA1", "SEA2", "SEA3", "SEA4a", "SEA4b", "SEA5a", "SEA5b")
DERIVED_CHECKS = ("CANCEL", "SHARP", "SHARP-ORDER")


def circ(model: AlgebraModel, a, b):
    """Sequential product ``a o b`` (measure ``a`` first, then ``b``)."""
    model.check(a, b)
    return model.circ(a, b)


def commutes(model: AlgebraModel, a, b) -> bool:
    model.check(a, b)
    return model.circ(a, b) == model.circ(b, a)


def noncommuting_pair(model: AlgebraModel, elements) -> Optional[tuple]:
    """First pair (canonical order) of ``elements`` that fails to commute."""
    items = sorted(set(elements))
    model.check(*items)
    for i, a in enumerate(items):
        for b in items[i + 1:]:
            if model.circ(a, b) != model.circ(b, a):
                return (a, b)
    return None


def is_commutative_set(model: AlgebraModel, elements) -> bool:
    return noncommuting_pair(model, elements) is None


def is_sharp(model: AlgebraModel, a) -> bool:
    """Sharpness via idempotence: ``a o a = a``."""
    model.check(a)
    return model.circ(a, a) == a


def sharp_via_meet(model: AlgebraModel, a, window=None) -> Optional[bool]:
    """Sharpness as ``a /\\ a' = 0`` computed from the order.

    Lower bounds of ``{a, a'}`` are collected over the whole carrier of a
    finite model, or over ``window`` for a symbolic one (exact whenever the
    window holds every lower bound of ``a``).  Returns None when the lower
    bounds have no greatest element.
    """
    model.check(a)
    if window is None:
        if not model.finite:
            raise ValueError("sharp_via_meet needs a window on infinite models")
        window = model.window()
    supp = model.supplement(a)
    lower = [x for x in sorted(set(window))
             if _differences(model, a, x) and _differences(model, supp, x)]
    for m in lower:
        if all(_differences(model, m, x) for x in lower):
            return m == model.zero
    return None


def nat_multiple(model: AlgebraModel, a, n: int):
    """``n*a = a (+) a (+) ... (+) a`` folded from the left, None if undefined."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    model.check(a)
    total = a
    for _ in range(n - 1):
        total = model.oplus(total, a)
        if total is None:
            return None
    return total


@dataclass(frozen=True)
class UniquenessCase:
    """``n*a = n*b = c`` together with the three hypotheses of the uniqueness theorem."""

    a: object
    b: object
    c: object
    n: int
    c_sharp: bool
    a_commutes_b: bool
    a_equals_b: bool

    @property
    def inconsistent(self) -> bool:
        # sharp c and a|b must force a = b in a sequential effect algebra
        return self.c_sharp and self.a_commutes_b and not self.a_equals_b

    def to_dict(self, model) -> dict:
        return {
            "a": model.format(self.a), "b": model.format(self.b), "c": model.format(self.c),
            "n": self.n, "c_sharp": self.c_sharp, "a_commutes_b": self.a_commutes_b,
            "a_equals_b": self.a_equals_b,
        }


def audit_sea(model: AlgebraModel, window=None, descriptor: Optional[str] = None,
              fail_fast: bool = False) -> AuditReport:
    """Check SEA1-SEA5 over ``window``.

    SEA4 and SEA5 are split into their two clauses: ``SEA4a`` is
    ``a o b' = b' o a`` and ``SEA4b`` associativity for a third window element;
    ``SEA5a`` is the product clause, ``SEA5b`` the sum clause.
    """
    W = resolve_window(model, window)
    report = AuditReport(window_descriptor=descriptor or model.window_descriptor(),
                         axioms=SEA_AXIOMS)
    bad = report.violations
    add, mul = model.oplus, model.circ
    zero, one = model.zero, model.one
    n = 0

    def found(v):
        bad.append(v)
        return fail_fast

    prod = {(a, b): mul(a, b) for a, b in itertools.product(W, repeat=2)}
    sums = {(a, b): add(a, b) for a, b in itertools.product(W, repeat=2)}
    orth = [(b, c, s) for (b, c), s in sums.items() if s is not None]

    # SEA1
    for a in W:
        for b, c, s in orth:
            n += 1
            lhs = mul(a, s)
            rhs = add(prod[a, b], prod[a, c])
            if lhs != rhs and found(Violation("SEA1", (a, b, c), lhs, rhs)):
                return report.finish()

    # SEA2
    for a in W:
        n += 1
        if prod[one, a] != a and found(Violation("SEA2", (a,), prod[one, a], a)):
            return report.finish()

    # SEA3
    for a, b in itertools.product(W, repeat=2):
        n += 1
        if prod[a, b] == zero and prod[b, a] != zero:
            if found(Violation("SEA3", (a, b), prod[a, b], prod[b, a])):
                return report.finish()

    # SEA4
    commuting = {(a, b) for a, b in itertools.product(W, repeat=2) if prod[a, b] == prod[b, a]}
    for a, b in sorted(commuting):
        n += 1
        try:
            bs = model.supplement(b)
        except SupplementError:
            continue  # EA3 failure, reported by audit_ea
        lhs, rhs = mul(a, bs), mul(bs, a)
        if lhs != rhs and found(Violation("SEA4a", (a, b), lhs, rhs)):
            return report.finish()
        ab = prod[a, b]
        for c in W:
            n += 1
            lhs = mul(a, prod[b, c])
            rhs = mul(ab, c)
            if lhs != rhs and found(Violation("SEA4b", (a, b, c), lhs, rhs)):
                return report.finish()

    # SEA5
    for c in W:
        partners = [x for x in W if (c, x) in commuting]
        for a, b in itertools.product(partners, repeat=2):
            n += 1
            ab = prod[a, b]
            lhs, rhs = mul(c, ab), mul(ab, c)
            if lhs != rhs and found(Violation("SEA5a", (a, b, c), lhs, rhs)):
                return report.finish()
            s = sums[a, b]
            if s is not None:
                lhs, rhs = mul(c, s), mul(s, c)
                if lhs != rhs and found(Violation("SEA5b", (a, b, c), lhs, rhs)):
                    return report.finish()

    report.checked_tuples = n
    return report.finish()


def audit_derived(model: AlgebraModel, window=None, descriptor: Optional[str] = None,
                  meet_window=None) -> AuditReport:
    """Check three properties every sequential effect algebra has, over ``window``.

    ``CANCEL`` cancellation, ``SHARP`` idempotence agrees with the meet-based
    sharpness wherever the meet exists, ``SHARP-ORDER`` for sharp ``c``:
    ``a <= c`` iff ``a o c = c o a = a``.  ``meet_window`` is the set used for
    lower bounds in ``SHARP`` on symbolic models (defaults to ``window``).
    """
    W = resolve_window(model, window)
    report = AuditReport(window_descriptor=descriptor or model.window_descriptor(),
                         axioms=DERIVED_CHECKS)
    bad = report.violations
    add, mul = model.oplus, model.circ
    n = 0

    for a in W:
        by_sum = {}
        for b in W:
            s = add(a, b)
            if s is not None:
                by_sum.setdefault(s, []).append(b)
        n += len(W) * len(W)
        for s, bs in by_sum.items():
            for b, c in itertools.combinations(bs, 2):
                bad.append(Violation("CANCEL", (a, b, c), s, s))

    lower = W if meet_window is None else meet_window
    for a in W:
        n += 1
        try:
            meet_sharp = sharp_via_meet(model, a, None if model.finite else lower)
        except SupplementError:
            continue
        idem = mul(a, a) == a
        if meet_sharp is not None and meet_sharp != idem:
            bad.append(Violation("SHARP", (a,), mul(a, a), a))

    sharp = [c for c in W if mul(c, c) == c]
    for c in sharp:
        for a in W:
            n += 1
            below = leq(model, a, c)
            absorbs = mul(a, c) == a and mul(c, a) == a
            if below != absorbs:
                bad.append(Violation("SHARP-ORDER", (a, c), mul(a, c), mul(c, a)))

    report.checked_tuples = n
    return report.finish()
