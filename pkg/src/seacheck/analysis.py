"""Generated sub-algebras, commutativity and the uniqueness search."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .core import AlgebraModel, resolve_window
from .sequential import UniquenessCase, nat_multiple, noncommuting_pair


class NotCommutativeError(ValueError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"elements {pair[0]!r} and {pair[1]!r} do not commute")


@dataclass
class ClosureResult:
    levels: list = field(default_factory=list)
    elements: frozenset = frozenset()
    reached_fixpoint: bool = False
    iterations: int = 0
    size_limit_hit: bool = False

    def to_dict(self, model) -> dict:
        def fmt(s):
            return [model.format(x) for x in sorted(s)]
        return {
            "levels": [fmt(level) for level in self.levels],
            "elements": fmt(self.elements),
            "reached_fixpoint": self.reached_fixpoint,
            "iterations": self.iterations,
            "size_limit_hit": self.size_limit_hit,
        }


def _elements(model, S, name="generating set") -> frozenset:
    S = frozenset(S)
    if not S:
        raise ValueError(f"empty {name}")
    model.check(*S)
    return S


def closure_step(model: AlgebraModel, S) -> frozenset:
    """One level: ``S`` plus all supplements, products and defined sums of members."""
    S = _elements(model, S)
    out = set(S)
    for a in S:
        out.add(model.supplement(a))
        for b in S:
            out.add(model.circ(a, b))
            s = model.oplus(a, b)
            if s is not None:
                out.add(s)
    return frozenset(out)


def generate_sub_sea(model: AlgebraModel, A, max_iterations: int = 64,
                     max_size: int = 10000) -> ClosureResult:
    """Iterate :func:`closure_step` from ``A`` until two levels agree.

    A level larger than ``max_size`` is discarded and flagged with
    ``size_limit_hit``; ``elements`` is then the last level within bounds.
    """
    current = _elements(model, A)
    result = ClosureResult(elements=current)
    while result.iterations < max_iterations:
        nxt = closure_step(model, current)
        result.iterations += 1
        if len(nxt) > max_size:
            result.size_limit_hit = True
            break
        result.levels.append(nxt)
        result.elements = nxt
        if nxt == current:
            result.reached_fixpoint = True
            break
        current = nxt
    return result


def closure_witness(model: AlgebraModel, F) -> Optional[tuple]:
    """First failure of closure for ``F`` as ``(operation, operands, result)``.

    Order: missing 0/1, then supplements, products, sums, each over members
    in canonical order.
    """
    members = sorted(set(F))
    model.check(*members)
    Fs = set(members)
    for special, label in ((model.zero, "zero"), (model.one, "one")):
        if special not in Fs:
            return (label, (), special)
    for a in members:
        s = model.supplement(a)
        if s not in Fs:
            return ("supplement", (a,), s)
    for a in members:
        for b in members:
            p = model.circ(a, b)
            if p not in Fs:
                return ("circ", (a, b), p)
    for a in members:
        for b in members:
            s = model.oplus(a, b)
            if s is not None and s not in Fs:
                return ("oplus", (a, b), s)
    return None


def is_sub_sea(model: AlgebraModel, F) -> tuple:
    """``(True, None)`` if ``F`` is closed, else ``(False, witness)``."""
    witness = closure_witness(model, F)
    return witness is None, witness


def commutant(model: AlgebraModel, A, window) -> frozenset:
    A = list(A)
    W = resolve_window(model, window)
    model.check(*A)
    return frozenset(x for x in W
                     if all(model.circ(x, a) == model.circ(a, x) for a in A))


def maximal_commutative_extension(model: AlgebraModel, F, window) -> frozenset:
    """Greedily extend the commutative set ``F`` inside ``window``.

    Candidates are tried in canonical order; the result is commutative and no
    further window element can be added.  Other orders may give other,
    equally maximal, sets.
    """
    W = resolve_window(model, window)
    accepted = list(sorted(set(F)))
    model.check(*accepted)
    pair = noncommuting_pair(model, accepted)
    if pair is not None:
        raise NotCommutativeError(pair)
    have = set(accepted)
    for x in W:
        if x in have:
            continue
        if all(model.circ(x, y) == model.circ(y, x) for y in accepted):
            accepted.append(x)
            have.add(x)
    return frozenset(accepted)


@dataclass
class CommutativeClosureReport:
    """Outcome of the commutativity check for a generated sub-algebra.

    ``closure_pair`` is a non-commuting pair inside the (possibly partial)
    closure; ``extension_witness`` a closure failure of the maximal extension
    restricted to the window; ``escaped`` closure elements inside the window
    that the extension misses.
    """

    closure: ClosureResult
    extension: frozenset
    closure_pair: Optional[tuple] = None
    extension_witness: Optional[tuple] = None
    escaped: tuple = ()

    @property
    def passed(self) -> bool:
        return self.closure_pair is None and self.extension_witness is None and not self.escaped

    def to_dict(self, model) -> dict:
        fmt = model.format
        wit = self.extension_witness
        return {
            "passed": self.passed,
            "closure": self.closure.to_dict(model),
            "closure_commutative": self.closure_pair is None,
            "closure_pair": None if self.closure_pair is None else [fmt(x) for x in self.closure_pair],
            "extension": [fmt(x) for x in sorted(self.extension)],
            "extension_witness": None if wit is None else
            {"op": wit[0], "args": [fmt(x) for x in wit[1]], "result": fmt(wit[2])},
            "escaped": [fmt(x) for x in self.escaped],
        }


def check_theorem1(model: AlgebraModel, A, window=None, max_iterations: int = 64,
                   max_size: int = 10000) -> CommutativeClosureReport:
    """Check that the sub-algebra generated by a commutative set commutes.

    Also checks, for the greedy maximal commutative extension of ``A`` inside
    ``window``, closure under the three operations wherever the result stays
    inside the window, and that it contains every closure element of the
    window.
    """
    A = _elements(model, A)
    pair = noncommuting_pair(model, A)
    if pair is not None:
        raise NotCommutativeError(pair)
    closure = generate_sub_sea(model, A, max_iterations, max_size)
    W = resolve_window(model, window)
    ext = maximal_commutative_extension(model, A, W)
    Wset = set(W)

    witness = None
    for a in sorted(ext):
        s = model.supplement(a)
        if s in Wset and s not in ext:
            witness = ("supplement", (a,), s)
            break
    if witness is None:
        for a in sorted(ext):
            for b in sorted(ext):
                p, s = model.circ(a, b), model.oplus(a, b)
                if p in Wset and p not in ext:
                    witness = ("circ", (a, b), p)
                elif s is not None and s in Wset and s not in ext:
                    witness = ("oplus", (a, b), s)
                if witness:
                    break
            if witness:
                break
    escaped = tuple(sorted(x for x in closure.elements if x in Wset and x not in ext))
    return CommutativeClosureReport(closure, ext, noncommuting_pair(model, closure.elements),
                          witness, escaped)


def uniqueness_search(model: AlgebraModel, n: int, window=None) -> list:
    """All ordered window pairs ``(a, b)`` with ``n*a = n*b`` defined.

    Each case records whether the common multiple is sharp, whether ``a`` and
    ``b`` commute and whether they are equal.  Pairs with ``a == b`` are
    included.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    W = resolve_window(model, window)
    by_multiple = {}
    for a in W:
        c = nat_multiple(model, a, n)
        if c is not None:
            by_multiple.setdefault(c, []).append(a)
    cases = []
    for c, group in by_multiple.items():
        sharp = model.circ(c, c) == c
        for a in group:
            for b in group:
                cases.append(UniquenessCase(
                    a, b, c, n, sharp, model.circ(a, b) == model.circ(b, a), a == b))
    cases.sort(key=lambda case: (case.a, case.b))
    return cases


def inconsistent_cases(cases) -> list:
    """Cases where sharp ``c`` and commuting ``a``, ``b`` still give ``a != b``."""
    return [case for case in cases if case.inconsistent]
