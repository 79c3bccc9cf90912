import itertools
from fractions import Fraction

import pytest

from seacheck.core import ModelError, ParseError, audit_ea
from seacheck.models import (E0Element, Left, Right, dump_finite, finite_tables, load_finite,
                             make_boolean, make_chain, make_e0, make_horizontal_sum, make_scale,
                             parse_finite)
from seacheck.sequential import audit_sea, circ, nat_multiple

HS = make_horizontal_sum()
SCALE = make_scale()


def test_boolean_sizes_and_ops():
    B1 = make_boolean(1)
    assert B1.labels == ("{}", "{1}")
    B2 = make_boolean(2)
    one, two = B2.parse("{1}"), B2.parse("{2}")
    assert circ(B2, one, two) == B2.zero
    assert B2.format(B2.oplus(one, two)) == "{1.2}"
    with pytest.raises(ModelError):
        make_boolean(0)
    with pytest.raises(ModelError):
        make_boolean(17)


def test_boolean_k3_audits_clean():
    B = make_boolean(3)
    assert audit_ea(B).ok and audit_sea(B).ok


def test_boolean_parse_errors():
    B = make_boolean(2)
    with pytest.raises(ParseError):
        B.parse("{3}")
    with pytest.raises(ParseError):
        B.parse("1")


def test_scale_arithmetic():
    h, t = Fraction(1, 2), Fraction(1, 3)
    assert SCALE.oplus(h, h) == 1
    assert SCALE.oplus(Fraction(2, 3), h) is None
    assert SCALE.circ(h, t) == Fraction(1, 6)
    assert audit_ea(SCALE, SCALE.window(8)).ok
    assert audit_sea(SCALE, SCALE.window(8)).ok


def test_horizontal_sum_examples():
    q = Fraction(1, 4)
    assert nat_multiple(HS, Left(q), 4) == HS.one == nat_multiple(HS, Right(q), 4)
    assert HS.circ(Left(q), Right(q)) == Left(Fraction(1, 16))
    assert HS.circ(Right(q), Left(q)) == Right(Fraction(1, 16))
    assert Left(0) == HS.zero and Right(1) == HS.one
    with pytest.raises(ModelError):
        Left(Fraction(3, 2))


def test_horizontal_sum_copy_discipline():
    W = HS.window(5)
    for a, b in itertools.product(W, repeat=2):
        if a.tag in ("L", "R"):
            p = HS.circ(a, b)
            assert p.tag == a.tag or p == HS.zero
        if a.tag in ("L", "R") and b.tag in ("L", "R"):
            assert (HS.oplus(a, b) is None) or a.tag == b.tag
            assert HS.circ(a, b) == HS.circ(b, a) if a.tag == b.tag else \
                HS.circ(a, b) != HS.circ(b, a)


def test_e0_sum_examples():
    m2, m3 = make_e0(2), make_e0(3)
    assert m2.oplus(m2.a(1, 0), m2.a(1, 0)) == m2.a(2, 0)
    assert m2.oplus(m2.a(0, 1), m2.a(0, 1)) == m2.a(2, 0)
    assert m3.oplus(m3.a(1, 2), m3.b(5, 1)) == m3.b(1, 2)
    assert m3.oplus(m3.b(5, 1), m3.a(1, 2)) == m3.b(1, 2)
    assert m2.circ(m2.a(2, 0), m2.a(2, 0)) == m2.zero
    assert m3.oplus(m3.a(2, 1), m3.b(2, 1)) == m3.one
    assert m3.oplus(m3.b(1, 0), m3.b(1, 0)) is None
    assert m3.oplus(m3.one, m3.a(1, 0)) is None


def test_e0_uncovered_case_is_undefined():
    # r - n inside [0, n0) with m > s falls in no case of the sum table
    m = make_e0(3)
    assert m.oplus(m.a(1, 2), m.b(3, 1)) is None
    assert m.oplus(m.a(0, 2), m.b(2, 0)) is None


def _e0_cases(m, x, y):
    """Guards of the a (+) b table that fire for (x, y), evaluated independently."""
    n, mm, r, s = x.n, x.m, y.n, y.m
    fired = []
    if n <= r and mm <= s and (r - n) ** 2 + (s - mm) ** 2 != 0:
        fired.append(("b", r - n, s - mm))
    if n == r and mm == s:
        fired.append(("1",))
    if n + m.n0 <= r and mm > s:
        fired.append(("b", r - n - m.n0, s - mm + m.n0))
    return fired


@pytest.mark.parametrize("n0", [2, 3, 5])
def test_e0_case_guards_disjoint_and_valid(n0):
    m = make_e0(n0)
    W = m.window(6)
    for x, y in itertools.product(W, repeat=2):
        if x.tag == "a" and y.tag == "b":
            assert len(_e0_cases(m, x, y)) <= 1
        for result in (m.oplus(x, y), m.circ(x, y)):
            assert result is None or m.contains(result), (x, y, result)


def test_e0_invalid_parameters():
    with pytest.raises(ModelError):
        make_e0(1)
    m = make_e0(2)
    with pytest.raises(KeyError):
        m.a(0, 0)
    with pytest.raises(KeyError):
        m.a(1, 2)


def test_e0_parse_format_round_trip():
    m = make_e0(3)
    for x in m.window(3):
        assert m.parse(m.format(x)) == x
    assert m.parse("a:2,1") == E0Element("a", 2, 1)
    with pytest.raises(ParseError) as info:
        m.parse("c:1,1")
    assert info.value.column == 1


def test_constructors_deterministic():
    assert make_e0(3) == make_e0(3)
    assert make_e0(3).window(4) == make_e0(3).window(4)
    assert finite_tables(make_boolean(2)) == finite_tables(make_boolean(2))


def test_boolean_file_round_trip(tmp_path):
    B = make_boolean(2)
    path = tmp_path / "b2.ea"
    path.write_text(dump_finite(B), encoding="utf-8")
    loaded = load_finite(path)
    assert finite_tables(loaded) == finite_tables(B)
    assert audit_ea(loaded).ok and audit_sea(loaded).ok


def test_file_without_product_is_bare():
    text = "elements: 0, h, 1\nzero: 0\none: 1\noplus:\n0,0,0\n0,h,h\nh,0,h\n0,1,1\n1,0,1\nh,h,1\n"
    model = parse_finite(text)
    assert not model.has_product
    assert finite_tables(model)[1:] == finite_tables(make_chain(2))[1:]


def test_file_non_total_circ():
    B = make_boolean(1)
    lines = dump_finite(B).splitlines()
    lines.remove("{1}, {1}, {1}")
    with pytest.raises(ModelError, match="not total"):
        parse_finite("\n".join(lines))


def test_file_conflicting_duplicate_sum():
    text = "elements: 0, 1\nzero: 0\none: 1\noplus:\n0, 1, 1\n0, 1, 0\n"
    with pytest.raises(ModelError, match="conflicting"):
        parse_finite(text)
    # an identical duplicate is harmless
    parse_finite("elements: 0, 1\nzero: 0\none: 1\noplus:\n0, 1, 1\n0, 1, 1\n")


def test_file_parse_errors_carry_position():
    with pytest.raises(ParseError) as info:
        parse_finite("elements: 0, 1\nzero: 0\none: 1\noplus:\n0, 1, 1\n0, x, 1\n")
    assert (info.value.line, info.value.column) == (6, 4)
    with pytest.raises(ParseError) as info:
        parse_finite("elements: 0, 1\nzero: 0\none: 1\noplus:\n0, 1\n")
    assert info.value.line == 5
    with pytest.raises(ParseError):
        parse_finite("zero: 0\none: 1\n")
    with pytest.raises(ParseError):
        parse_finite("elements: 0, 1\nzero: 0\none: 1\nstray line\n")


def test_file_zero_equals_one_rejected():
    with pytest.raises(ModelError):
        parse_finite("elements: 0, 1\nzero: 0\none: 0\n")


def test_chain_model():
    c = make_chain(2)
    assert c.labels == ("0", "1/2", "1")
    assert c.oplus(1, 1) == 2 and c.oplus(1, 2) is None
    assert audit_ea(c).ok
