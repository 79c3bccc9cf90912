"""Concrete algebras: Boolean algebras, the rational scale, the horizontal sum
of two rational scales, the ``E0`` family, and user tables loaded from text.

Finite model text format::

    # comment lines start with '#'
    elements: 0, a, b, 1
    zero: 0
    one: 1
    oplus:
    0, a, a
    a, 0, a
    circ:
    a, b, 0

``oplus`` and ``circ`` are followed by one ``left, right, result`` triple per
line.  Labels are non-empty, contain no commas and are stripped of outer
whitespace.  ``oplus`` pairs not listed are undefined; ``circ``, when
present, must list every ordered pair.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import NamedTuple, Optional

from .core import AlgebraModel, FiniteModel, ModelError, ParseError, SupplementError

ZERO_TAG, ONE_TAG = "0", "1"


# -- Boolean algebras -------------------------------------------------------

def subset_label(mask: int, k: int) -> str:
    return "{" + ".".join(str(i + 1) for i in range(k) if mask >> i & 1) + "}"


class BooleanModel(FiniteModel):
    """Subsets of ``{1..k}``; element ``i`` is the subset with bitmask ``i``.

    Operations are computed with bit arithmetic instead of stored tables.
    """

    def __init__(self, k: int):
        if not 1 <= k <= 16:
            raise ModelError("k must lie in 1..16")
        self.k = k
        self.full = (1 << k) - 1
        self.labels = tuple(subset_label(i, k) for i in range(self.full + 1))
        self.index = {label: i for i, label in enumerate(self.labels)}
        self.zero, self.one = 0, self.full
        self.name = f"boolean(k={k})"
        self.has_product = True
        self.products = None
        self._sums = None

    @property
    def sums(self):
        if self._sums is None:
            size = self.full + 1
            self._sums = {(a, b): a | b for a in range(size) for b in range(size) if not a & b}
        return self._sums

    def oplus(self, a, b):
        return None if a & b else a | b

    def circ(self, a, b):
        return a & b

    def supplement_candidates(self, a):
        return (a ^ self.full,)

    def supplement(self, a):
        return a ^ self.full

    def parse(self, text: str):
        text = text.strip()
        if text in self.index:
            return self.index[text]
        if not (text.startswith("{") and text.endswith("}")):
            raise ParseError(f"expected a subset like {{1.2}}, got {text!r}", column=1)
        mask = 0
        body = text[1:-1]
        pos = 2
        for part in body.split(".") if body else []:
            if not part.isdigit() or not 1 <= int(part) <= self.k:
                raise ParseError(f"bad subset member {part!r} in {text!r}", column=pos)
            mask |= 1 << (int(part) - 1)
            pos += len(part) + 1
        return mask

    def __repr__(self):
        return f"BooleanModel(k={self.k})"


def make_boolean(k: int) -> BooleanModel:
    """Boolean algebra on the subsets of ``{1..k}``: disjoint union, complement, intersection."""
    return BooleanModel(k)


def make_chain(steps: int, products=None) -> FiniteModel:
    """The finite chain ``0, 1/steps, ..., 1`` with truncated addition.

    Without ``products`` this is a bare effect algebra, used as input to the
    product search (``steps=2`` is the unique three-element effect algebra).
    """
    if steps < 1:
        raise ModelError("steps must be positive")
    labels = [str(Fraction(i, steps)) for i in range(steps + 1)]
    sums = {(i, j): i + j for i in range(steps + 1) for j in range(steps + 1) if i + j <= steps}
    return FiniteModel(labels, 0, steps, sums, products, name=f"chain({steps})")


# -- rational models --------------------------------------------------------

def fractions_upto(max_den: int, endpoints: bool = True) -> list:
    """Rationals in [0, 1] (or (0, 1)) with denominator at most ``max_den``."""
    out = {Fraction(p, q) for q in range(1, max_den + 1) for p in range(0, q + 1)}
    if not endpoints:
        out -= {Fraction(0), Fraction(1)}
    return sorted(out)


def _parse_fraction(text: str, column: int = 1) -> Fraction:
    if not re.fullmatch(r"\s*\d+(/\d+)?\s*", text):
        raise ParseError(f"expected a rational like 1/2, got {text!r}", column=column)
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {text!r}", column=column) from None


class ScaleModel(AlgebraModel):
    """Exact rationals in [0, 1]: bounded addition, ``1 - a``, multiplication.

    Elements are :class:`fractions.Fraction` values.
    """

    name = "scale"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __eq__(self, other):
        return isinstance(other, ScaleModel)

    def __hash__(self):
        return hash("scale")

    def oplus(self, a, b):
        s = a + b
        return s if s <= 1 else None

    def circ(self, a, b):
        return a * b

    def supplement(self, a):
        return 1 - a

    def contains(self, a) -> bool:
        return isinstance(a, Fraction) and 0 <= a <= 1

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        q = _parse_fraction(text)
        if not 0 <= q <= 1:
            raise ParseError(f"{text!r} is outside [0, 1]", column=1)
        return q

    def window(self, bound: Optional[int] = 8) -> list:
        return fractions_upto(bound or 8)

    def window_descriptor(self, bound: Optional[int] = 8) -> str:
        return f"denominators <= {bound or 8}"

    def difference_candidates(self, a, b):
        return [b - a] if a <= b else []


def make_scale() -> ScaleModel:
    return ScaleModel()


class HSElement(NamedTuple):
    """Element of the horizontal sum: tag ``'0'``, ``'1'``, ``'L'`` or ``'R'``."""

    tag: str
    q: Fraction

    def __repr__(self):
        if self.tag in (ZERO_TAG, ONE_TAG):
            return self.tag
        return f"{self.tag}({self.q})"


HS_ZERO = HSElement(ZERO_TAG, Fraction(0))
HS_ONE = HSElement(ONE_TAG, Fraction(1))


def hs_element(tag: str, q) -> HSElement:
    """Build a Left/Right element, collapsing the endpoints 0 and 1."""
    q = Fraction(q)
    if q == 0:
        return HS_ZERO
    if q == 1:
        return HS_ONE
    if tag not in ("L", "R") or not 0 < q < 1:
        raise ModelError(f"invalid horizontal-sum element {tag}:{q}")
    return HSElement(tag, q)


def Left(q) -> HSElement:
    return hs_element("L", q)


def Right(q) -> HSElement:
    return hs_element("R", q)


class HorizontalSumModel(AlgebraModel):
    """Two rational unit intervals glued at 0 and 1.

    Sums exist only inside one copy.  The product of two interior elements
    is the product of their values placed in the copy of the first factor,
    so elements of different copies never commute.
    """

    name = "horizontal-sum"

    def __init__(self):
        self.zero = HS_ZERO
        self.one = HS_ONE

    def __eq__(self, other):
        return isinstance(other, HorizontalSumModel)

    def __hash__(self):
        return hash("hs")

    def oplus(self, a, b):
        if a.tag == ZERO_TAG:
            return b
        if b.tag == ZERO_TAG:
            return a
        if a.tag == ONE_TAG or b.tag == ONE_TAG or a.tag != b.tag:
            return None
        s = a.q + b.q
        if s < 1:
            return HSElement(a.tag, s)
        return HS_ONE if s == 1 else None

    def circ(self, a, b):
        if a.tag == ZERO_TAG or b.tag == ZERO_TAG:
            return HS_ZERO
        if a.tag == ONE_TAG:
            return b
        if b.tag == ONE_TAG:
            return a
        return HSElement(a.tag, a.q * b.q)

    def supplement(self, a):
        if a.tag == ZERO_TAG:
            return HS_ONE
        if a.tag == ONE_TAG:
            return HS_ZERO
        return HSElement(a.tag, 1 - a.q)

    def contains(self, a) -> bool:
        if not isinstance(a, HSElement):
            return False
        if a.tag in (ZERO_TAG, ONE_TAG):
            return a == (HS_ZERO if a.tag == ZERO_TAG else HS_ONE)
        return a.tag in ("L", "R") and isinstance(a.q, Fraction) and 0 < a.q < 1

    def format(self, a) -> str:
        return a.tag if a.tag in (ZERO_TAG, ONE_TAG) else f"{a.tag}:{a.q}"

    def parse(self, text: str):
        text = text.strip()
        if text in (ZERO_TAG, ONE_TAG):
            return HS_ZERO if text == ZERO_TAG else HS_ONE
        m = re.fullmatch(r"([LR]):(.*)", text)
        if not m:
            raise ParseError(f"expected 0, 1, L:p/q or R:p/q, got {text!r}", column=1)
        q = _parse_fraction(m.group(2), column=3)
        if not 0 < q < 1:
            raise ParseError(f"value in {text!r} must lie strictly between 0 and 1", column=3)
        return HSElement(m.group(1), q)

    def window(self, bound: Optional[int] = 8) -> list:
        inner = fractions_upto(bound or 8, endpoints=False)
        return [HS_ZERO, HS_ONE] + [HSElement(t, q) for t in ("L", "R") for q in inner]

    def window_descriptor(self, bound: Optional[int] = 8) -> str:
        return f"denominators <= {bound or 8}"

    def difference_candidates(self, a, b):
        out = {HS_ZERO, HS_ONE, self.supplement(a), b}
        if b.tag == a.tag and a.q < b.q and a.tag in ("L", "R"):
            out.add(HSElement(a.tag, b.q - a.q))
        return out


def make_horizontal_sum() -> HorizontalSumModel:
    return HorizontalSumModel()


# -- the E0 family ----------------------------------------------------------

class E0Element(NamedTuple):
    """``a(n, m)``, ``b(n, m)``, ``0`` or ``1``; the last two carry n = m = 0."""

    tag: str
    n: int = 0
    m: int = 0

    def __repr__(self):
        if self.tag in (ZERO_TAG, ONE_TAG):
            return self.tag
        return f"{self.tag}{self.n},{self.m}"


E0_ZERO = E0Element(ZERO_TAG)
E0_ONE = E0Element(ONE_TAG)


class E0Model(AlgebraModel):
    """The infinite sequential effect algebra built from ``a(n,m)``, ``b(n,m)``.

    Indices satisfy ``n >= 0``, ``0 <= m < n0`` and ``(n, m) != (0, 0)``.
    Sums and products follow the defining case tables literally; pairs not
    covered by a case have no sum.
    """

    def __init__(self, n0: int):
        if not isinstance(n0, int) or n0 < 2:
            raise ModelError("n0 must be an integer >= 2")
        self.n0 = n0
        self.name = f"e0(n0={n0})"
        self.zero = E0_ZERO
        self.one = E0_ONE

    def __eq__(self, other):
        return isinstance(other, E0Model) and other.n0 == self.n0

    def __hash__(self):
        return hash(("e0", self.n0))

    def a(self, n: int, m: int) -> E0Element:
        x = E0Element("a", n, m)
        self.check(x)
        return x

    def b(self, n: int, m: int) -> E0Element:
        x = E0Element("b", n, m)
        self.check(x)
        return x

    def _carry(self, tag, n, m):
        if m < self.n0:
            return E0Element(tag, n, m)
        return E0Element(tag, n + self.n0, m - self.n0)

    def oplus(self, x, y):
        if x.tag == ZERO_TAG:
            return y
        if y.tag == ZERO_TAG:
            return x
        if x.tag == "a" and y.tag == "a":
            return self._carry("a", x.n + y.n, x.m + y.m)
        if x.tag == "b" and y.tag == "a":
            x, y = y, x
        if x.tag != "a" or y.tag != "b":
            return None
        n, m, r, s = x.n, x.m, y.n, y.m
        if n == r and m == s:
            return E0_ONE
        if n <= r and m <= s:
            return E0Element("b", r - n, s - m)
        if n + self.n0 <= r and m > s:
            return E0Element("b", r - n - self.n0, s - m + self.n0)
        return None

    def circ(self, x, y):
        if x.tag == ZERO_TAG or y.tag == ZERO_TAG:
            return E0_ZERO
        if x.tag == ONE_TAG:
            return y
        if y.tag == ONE_TAG:
            return x
        if x.tag == "a":
            return E0_ZERO if y.tag == "a" else x
        if y.tag == "a":
            return y
        return self._carry("b", x.n + y.n, x.m + y.m)

    def supplement(self, x):
        if x.tag == ZERO_TAG:
            return E0_ONE
        if x.tag == ONE_TAG:
            return E0_ZERO
        return E0Element("b" if x.tag == "a" else "a", x.n, x.m)

    def contains(self, x) -> bool:
        if not isinstance(x, E0Element):
            return False
        if x.tag in (ZERO_TAG, ONE_TAG):
            return x.n == 0 and x.m == 0
        return (x.tag in ("a", "b") and type(x.n) is int and type(x.m) is int
                and x.n >= 0 and 0 <= x.m < self.n0 and (x.n, x.m) != (0, 0))

    def format(self, x) -> str:
        return x.tag if x.tag in (ZERO_TAG, ONE_TAG) else f"{x.tag}:{x.n},{x.m}"

    def parse(self, text: str):
        text = text.strip()
        if text in (ZERO_TAG, ONE_TAG):
            return E0_ZERO if text == ZERO_TAG else E0_ONE
        m = re.fullmatch(r"([ab]):(\d+),(\d+)", text)
        if not m:
            raise ParseError(f"expected 0, 1, a:n,m or b:n,m, got {text!r}", column=1)
        x = E0Element(m.group(1), int(m.group(2)), int(m.group(3)))
        if not self.contains(x):
            raise ParseError(f"{text!r} violates 0 <= m < {self.n0}, (n, m) != (0, 0)", column=3)
        return x

    def window(self, bound: Optional[int] = 6) -> list:
        N = 6 if bound is None else bound
        out = [E0_ZERO, E0_ONE]
        for tag in ("a", "b"):
            out += [E0Element(tag, n, m) for n in range(N + 1) for m in range(self.n0)
                    if (n, m) != (0, 0)]
        return out

    def window_descriptor(self, bound: Optional[int] = 6) -> str:
        return f"n <= {6 if bound is None else bound}"

    def difference_candidates(self, x, y):
        # a solution c of x (+) c = y never has first index above x.n + y.n + n0
        return self.window(x.n + y.n + self.n0)


def make_e0(n0: int) -> E0Model:
    return E0Model(n0)


# -- finite model files -----------------------------------------------------

_HEADER = re.compile(r"^\s*(elements|zero|one|oplus|circ)\s*:(.*)$")


def parse_finite(text: str, name: str = "finite") -> FiniteModel:
    """Parse the finite model text format (see module docstring)."""
    fields = {}
    section = None
    triples = {"oplus": [], "circ": []}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip()
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        m = _HEADER.match(line)
        if m and (m.group(1) == "elements" or "," not in line):
            key, rest = m.group(1), m.group(2)
            if key in fields:
                raise ParseError(f"duplicate field {key!r}", lineno, 1)
            if key in triples:
                if rest.strip():
                    raise ParseError(f"triples for {key!r} go on the following lines",
                                     lineno, m.start(2) + 1)
                section = key
                fields[key] = lineno
            else:
                section = None
                fields[key] = (rest, lineno, m.start(2) + 1)
            continue
        if section is None:
            raise ParseError("expected a field header (elements/zero/one/oplus/circ)", lineno, 1)
        parts = line.split(",")
        if len(parts) != 3:
            raise ParseError(f"expected 'left, right, result', got {len(parts)} fields", lineno, 1)
        cols, col = [], 1
        for part in parts:
            cols.append(col + len(part) - len(part.lstrip()))
            col += len(part) + 1
        labels = [p.strip() for p in parts]
        for label, c in zip(labels, cols):
            if not label:
                raise ParseError("empty label", lineno, c)
        triples[section].append((labels, lineno, cols))

    for key in ("elements", "zero", "one"):
        if key not in fields:
            raise ParseError(f"missing field {key!r}")
    rest, lineno, col = fields["elements"]
    labels = [p.strip() for p in rest.split(",")]
    if any(not label for label in labels):
        raise ParseError("empty element label", lineno, col)
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate element label", lineno, col)
    index = {label: i for i, label in enumerate(labels)}

    def resolve(label, lineno, col):
        if label not in index:
            raise ParseError(f"unknown label {label!r}", lineno, col)
        return index[label]

    zero = resolve(fields["zero"][0].strip(), *fields["zero"][1:])
    one = resolve(fields["one"][0].strip(), *fields["one"][1:])

    sums = {}
    for (l, r, res), lineno, cols in triples["oplus"]:
        key = (resolve(l, lineno, cols[0]), resolve(r, lineno, cols[1]))
        val = resolve(res, lineno, cols[2])
        if sums.get(key, val) != val:
            raise ModelError(f"line {lineno}: conflicting duplicate oplus entry for ({l}, {r})")
        sums[key] = val

    products = None
    if "circ" in fields:
        table = {}
        for (l, r, res), lineno, cols in triples["circ"]:
            key = (resolve(l, lineno, cols[0]), resolve(r, lineno, cols[1]))
            val = resolve(res, lineno, cols[2])
            if table.get(key, val) != val:
                raise ModelError(f"line {lineno}: conflicting duplicate circ entry for ({l}, {r})")
            table[key] = val
        size = len(labels)
        missing = [(i, j) for i in range(size) for j in range(size) if (i, j) not in table]
        if missing:
            i, j = missing[0]
            raise ModelError(f"circ table is not total: missing ({labels[i]}, {labels[j]}) "
                             f"and {len(missing) - 1} more")
        products = [[table[i, j] for j in range(size)] for i in range(size)]
    return FiniteModel(labels, zero, one, sums, products, name=name)


def load_finite(path) -> FiniteModel:
    path = Path(path)
    return parse_finite(path.read_text(encoding="utf-8"), name=path.stem)


def finite_tables(model: FiniteModel) -> tuple:
    """(labels, zero, one, sums, products) evaluated through the model's operations."""
    els = model.elements()
    sums = {(a, b): model.oplus(a, b) for a in els for b in els if model.oplus(a, b) is not None}
    products = None
    if model.has_product:
        products = tuple(tuple(model.circ(a, b) for b in els) for a in els)
    return tuple(model.labels), model.zero, model.one, sums, products


def format_circ(model: FiniteModel, products) -> list:
    lab = model.labels
    return ["circ:"] + [f"{lab[i]}, {lab[j]}, {lab[products[i][j]]}"
                        for i in range(len(lab)) for j in range(len(lab))]


def dump_finite(model: FiniteModel) -> str:
    """Serialise a finite model in the text format accepted by :func:`parse_finite`."""
    labels, zero, one, sums, products = finite_tables(model)
    if any("," in label for label in labels):
        raise ModelError("labels containing commas cannot be written")
    lines = [f"# {model.name}", "elements: " + ", ".join(labels),
             f"zero: {labels[zero]}", f"one: {labels[one]}", "oplus:"]
    lines += [f"{labels[a]}, {labels[b]}, {labels[c]}" for (a, b), c in sorted(sums.items())]
    if products is not None:
        lines += format_circ(model, products)
    return "\n".join(lines) + "\n"


def builtin(name: str, n0: Optional[int] = None, k: Optional[int] = None) -> AlgebraModel:
    """Construct a shipped model by name: boolean, scale, hs, e0, chain."""
    if name == "boolean":
        return make_boolean(k if k is not None else 2)
    if name == "scale":
        return make_scale()
    if name in ("hs", "horizontal-sum"):
        return make_horizontal_sum()
    if name == "e0":
        return make_e0(n0 if n0 is not None else 2)
    if name == "chain":
        return make_chain(k if k is not None else 2)
    raise ModelError(f"unknown model {name!r}")


__all__ = [
    "BooleanModel", "E0Element", "E0Model", "HSElement", "HorizontalSumModel", "Left",
    "Right", "ScaleModel", "SupplementError", "builtin", "dump_finite", "finite_tables",
    "fractions_upto", "load_finite", "make_boolean", "make_chain", "make_e0",
    "make_horizontal_sum", "make_scale", "parse_finite",
]
