"""Effect-algebra kernel.

An effect algebra is a set with distinct elements 0 and 1 and a partial sum
``oplus`` obeying EA1-EA4.  Models come in two flavours behind one interface:

* :class:`FiniteModel` stores explicit tables and uses integer indices into an
  ordered carrier list as element handles.
* symbolic models (see :mod:`seacheck.models`) compute results by rule and use
  small immutable values (named tuples, fractions) as handles.

Handles of one model are totally ordered by Python's ``<``; that order is the
canonical order used for reports and tie-breaking.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Optional, Sequence

Element = Hashable


class ElementError(KeyError):
    """Raised when a handle does not belong to the model it is used with."""


class ModelError(ValueError):
    """Structural problem with a model (bad construction or file contents)."""


class ParseError(ModelError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line else (f"position {column}: " if column else "")
        super().__init__(where + message)


class SupplementError(ModelError):
    """No unique orthosupplement exists, i.e. the model breaks EA3."""

    def __init__(self, element, candidates):
        self.element = element
        self.candidates = tuple(candidates)
        kind = "no" if not self.candidates else "more than one"
        super().__init__(f"{kind} orthosupplement for {element!r}: {self.candidates!r}")


@dataclass(frozen=True)
class Ambiguous:
    """Result of ``ominus`` when several differences exist (cancellation fails)."""

    candidates: tuple


class AlgebraModel:
    """Common interface of finite and symbolic models.

    Subclasses provide ``oplus``, ``circ``, ``supplement``, ``contains``,
    ``format``, ``parse``, ``window`` and ``difference_candidates``.  The
    unchecked methods here are the raw operations; the module level functions
    validate their arguments first.
    """

    name: str = "model"
    zero: Any
    one: Any
    finite: bool = False
    has_product: bool = True

    def oplus(self, a, b):
        raise NotImplementedError

    def circ(self, a, b):
        raise NotImplementedError

    def supplement(self, a):
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        raise NotImplementedError

    def window(self, bound: Optional[int] = None) -> list:
        raise NotImplementedError

    def window_descriptor(self, bound: Optional[int] = None) -> str:
        return "full carrier" if self.finite else f"bound={bound}"

    def difference_candidates(self, a, b) -> Iterable:
        """Finite superset of all ``c`` that can satisfy ``a (+) c = b``."""
        raise NotImplementedError

    def check(self, *elements):
        for x in elements:
            if not self.contains(x):
                raise ElementError(f"{x!r} is not an element of {self.name}")


class FiniteModel(AlgebraModel):
    """Table-backed model over an ordered list of labels.

    ``sums`` maps ordered index pairs to an index; missing pairs are
    undefined.  ``products`` is a row-major tuple of tuples, or None for a bare
    effect algebra (the input of the product search).
    """

    finite = True

    def __init__(self, labels: Sequence[str], zero: int, one: int, sums: dict,
                 products: Optional[Sequence[Sequence[int]]] = None, name: str = "finite"):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ModelError("duplicate element labels")
        size = len(self.labels)
        if not (0 <= zero < size and 0 <= one < size):
            raise ModelError("zero/one outside the carrier")
        if zero == one:
            raise ModelError("zero and one must be distinct")
        self.zero = zero
        self.one = one
        self.name = name
        self.index = {label: i for i, label in enumerate(self.labels)}
        for (a, b), c in sums.items():
            if not all(0 <= x < size for x in (a, b, c)):
                raise ModelError(f"sum entry {(a, b, c)} leaves the carrier")
        self.sums = dict(sums)
        if products is not None:
            products = tuple(tuple(row) for row in products)
            if len(products) != size or any(len(row) != size for row in products):
                raise ModelError("product table is not total")
            if any(not 0 <= x < size for row in products for x in row):
                raise ModelError("product entry leaves the carrier")
        self.products = products
        self.has_product = products is not None
        self._supplements = None

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return (isinstance(other, FiniteModel) and self.labels == other.labels
                and self.zero == other.zero and self.one == other.one
                and self.sums == other.sums and self.products == other.products)

    def __hash__(self):
        return hash((self.labels, self.zero, self.one))

    def __repr__(self):
        return f"FiniteModel({self.name!r}, size={len(self)})"

    def with_product(self, products, name: Optional[str] = None) -> "FiniteModel":
        return FiniteModel(self.labels, self.zero, self.one, self.sums, products,
                           name=name or self.name)

    def elements(self) -> list:
        return list(range(len(self.labels)))

    def oplus(self, a, b):
        return self.sums.get((a, b))

    def circ(self, a, b):
        if self.products is None:
            raise ModelError(f"{self.name} has no sequential product")
        return self.products[a][b]

    def supplement_candidates(self, a) -> tuple:
        if self._supplements is None:
            found = {}
            for (x, y), z in sorted(self.sums.items()):
                if z == self.one:
                    found.setdefault(x, []).append(y)
            self._supplements = {x: tuple(ys) for x, ys in found.items()}
        return self._supplements.get(a, ())

    def supplement(self, a):
        candidates = self.supplement_candidates(a)
        if len(candidates) != 1:
            raise SupplementError(a, candidates)
        return candidates[0]

    def contains(self, a) -> bool:
        return type(a) is int and 0 <= a < len(self.labels)

    def format(self, a) -> str:
        return self.labels[a]

    def parse(self, text: str):
        try:
            return self.index[text.strip()]
        except KeyError:
            raise ParseError(f"unknown element label {text.strip()!r}") from None

    def window(self, bound=None) -> list:
        return self.elements()

    def difference_candidates(self, a, b):
        return self.elements()


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    lhs: Any
    rhs: Any

    def sort_key(self):
        return (self.axiom, self.witness)


@dataclass
class AuditReport:
    """Violations found by an audit plus coverage counters.

    ``lhs``/``rhs`` hold element handles, None for "undefined", or for
    existence checks (EA3 on finite models) a tuple of candidates.
    """

    violations: list = field(default_factory=list)
    checked_tuples: int = 0
    window_descriptor: str = ""
    axioms: tuple = ()

    def __bool__(self):
        return not self.violations

    @property
    def ok(self) -> bool:
        return not self.violations

    def finish(self) -> "AuditReport":
        self.violations.sort(key=Violation.sort_key)
        return self

    def merge(self, other: "AuditReport") -> "AuditReport":
        return AuditReport(
            violations=sorted(self.violations + other.violations, key=Violation.sort_key),
            checked_tuples=self.checked_tuples + other.checked_tuples,
            window_descriptor=self.window_descriptor or other.window_descriptor,
            axioms=self.axioms + tuple(a for a in other.axioms if a not in self.axioms),
        )

    def counts(self) -> dict:
        out = {axiom: 0 for axiom in self.axioms}
        for v in self.violations:
            out[v.axiom] = out.get(v.axiom, 0) + 1
        return out

    def to_dict(self, model: AlgebraModel) -> dict:
        return {
            "axioms": list(self.axioms),
            "checked_tuples": self.checked_tuples,
            "window": self.window_descriptor,
            "violations": [violation_to_dict(model, v) for v in self.violations],
        }

    @classmethod
    def from_dict(cls, model: AlgebraModel, data: dict) -> "AuditReport":
        return cls(
            violations=[violation_from_dict(model, v) for v in data["violations"]],
            checked_tuples=data["checked_tuples"],
            window_descriptor=data["window"],
            axioms=tuple(data["axioms"]),
        )

    def format_lines(self, model: AlgebraModel) -> list:
        lines = []
        for v in self.violations:
            args = ", ".join(model.format(x) for x in v.witness)
            lines.append(f"{v.axiom}({args}): lhs={_render(model, v.lhs)} rhs={_render(model, v.rhs)}")
        return lines


def _render(model, value) -> str:
    if value is None:
        return "undefined"
    if isinstance(value, tuple) and not model.contains(value):
        return "[" + " ".join(model.format(x) for x in value) + "]"
    return model.format(value)


def _value_to_json(model, value):
    if value is None:
        return None
    if isinstance(value, tuple) and not model.contains(value):
        return {"candidates": [model.format(x) for x in value]}
    return model.format(value)


def _value_from_json(model, value):
    if value is None:
        return None
    if isinstance(value, dict):
        return tuple(model.parse(x) for x in value["candidates"])
    return model.parse(value)


def violation_to_dict(model, v: Violation) -> dict:
    return {
        "axiom": v.axiom,
        "witness": [model.format(x) for x in v.witness],
        "lhs": _value_to_json(model, v.lhs),
        "rhs": _value_to_json(model, v.rhs),
    }


def violation_from_dict(model, data: dict) -> Violation:
    return Violation(
        data["axiom"],
        tuple(model.parse(x) for x in data["witness"]),
        _value_from_json(model, data["lhs"]),
        _value_from_json(model, data["rhs"]),
    )


# -- operations -------------------------------------------------------------

def oplus(model: AlgebraModel, a, b):
    """Return ``a (+) b`` or None when the sum is undefined."""
    model.check(a, b)
    return model.oplus(a, b)


def orthogonal(model: AlgebraModel, a, b) -> bool:
    model.check(a, b)
    return model.oplus(a, b) is not None


def orthosupplement(model: AlgebraModel, a):
    """The unique ``b`` with ``a (+) b = 1``; raises SupplementError otherwise."""
    model.check(a)
    return model.supplement(a)


def _differences(model, b, a) -> tuple:
    return tuple(sorted(c for c in set(model.difference_candidates(a, b))
                        if model.oplus(a, c) == b))


def ominus(model: AlgebraModel, b, a):
    """Return ``b (-) a``: the ``c`` with ``a (+) c = b``.

    None when no such ``c`` exists, an :class:`Ambiguous` when several do.
    """
    model.check(a, b)
    found = _differences(model, b, a)
    if not found:
        return None
    if len(found) > 1:
        return Ambiguous(found)
    return found[0]


def leq(model: AlgebraModel, a, b) -> bool:
    model.check(a, b)
    return bool(_differences(model, b, a))


# -- EA1-EA4 audit ----------------------------------------------------------

EA_AXIOMS = ("EA1", "EA2", "EA3", "EA4")


def resolve_window(model: AlgebraModel, window=None) -> list:
    if window is None:
        if not model.finite:
            raise ValueError(f"{model.name} is infinite; an explicit window is required")
        window = model.window()
    window = sorted(set(window))
    model.check(*window)
    return window


def audit_ea(model: AlgebraModel, window=None, descriptor: Optional[str] = None,
             fail_fast: bool = False) -> AuditReport:
    """Check EA1-EA4 on every tuple drawn from ``window``.

    Intermediate sums are evaluated exactly even when they leave the window.
    EA3 is an existence/uniqueness scan on finite models and a consistency
    check of the supplement rule (``a (+) a' = 1``, ``a'' = a``) otherwise.
    """
    W = resolve_window(model, window)
    report = AuditReport(window_descriptor=descriptor or model.window_descriptor(),
                         axioms=EA_AXIOMS)
    bad = report.violations
    add = model.oplus
    one, zero = model.one, model.zero
    n = 0

    # EA1
    for a, b in itertools.product(W, repeat=2):
        n += 1
        s = add(a, b)
        if s is not None:
            t = add(b, a)
            if t != s:
                bad.append(Violation("EA1", (a, b), s, t))
                if fail_fast:
                    return report.finish()

    # EA2
    sums = {}
    for a, b in itertools.product(W, repeat=2):
        sums[a, b] = add(a, b)
    for b, c in itertools.product(W, repeat=2):
        bc = sums[b, c]
        if bc is None:
            n += len(W)
            continue
        for a in W:
            n += 1
            lhs = add(a, bc)
            if lhs is None:
                continue
            ab = sums[a, b]
            rhs = None if ab is None else add(ab, c)
            if rhs != lhs:
                bad.append(Violation("EA2", (a, b, c), lhs, rhs))
                if fail_fast:
                    return report.finish()

    # EA3
    for a in W:
        n += 1
        if model.finite:
            found = model.supplement_candidates(a)
            if len(found) != 1:
                bad.append(Violation("EA3", (a,), found, None))
            continue
        try:
            s = model.supplement(a)
        except SupplementError as exc:
            bad.append(Violation("EA3", (a,), exc.candidates, None))
            continue
        total = add(a, s)
        if total != one:
            bad.append(Violation("EA3", (a,), total, one))
        elif model.supplement(s) != a:
            bad.append(Violation("EA3", (a,), model.supplement(s), a))
    if fail_fast and bad:
        return report.finish()

    # EA4
    for a in W:
        n += 1
        if a != zero and add(a, one) is not None:
            bad.append(Violation("EA4", (a,), add(a, one), None))

    report.checked_tuples = n
    return report.finish()
