import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seacheck.core import (Ambiguous, ElementError, FiniteModel, SupplementError, audit_ea,
                           leq, ominus, oplus, orthogonal, orthosupplement)
from seacheck.models import make_boolean, make_e0, make_horizontal_sum, make_scale

from oracles import all_subsets, set_ops


@pytest.fixture
def e0_2():
    return make_e0(2)


@pytest.fixture
def e0_3():
    return make_e0(3)


def test_oplus_e0_examples(e0_2, e0_3):
    assert oplus(e0_3, e0_3.a(1, 1), e0_3.a(2, 1)) == e0_3.a(3, 2)
    assert oplus(e0_2, e0_2.a(0, 1), e0_2.a(0, 1)) == e0_2.a(2, 0)


@pytest.mark.parametrize("model, bound", [(make_e0(2), 3), (make_scale(), 5),
                                          (make_horizontal_sum(), 5), (make_boolean(3), None)])
def test_zero_is_identity(model, bound):
    for x in model.window(bound):
        assert oplus(model, model.zero, x) == x
        assert oplus(model, x, model.zero) == x


def test_boolean_sum_is_disjoint_union():
    B = make_boolean(3)
    one, two, one_three = B.parse("{1}"), B.parse("{2}"), B.parse("{1.3}")
    assert B.format(oplus(B, one, two)) == "{1.2}"
    assert oplus(B, one, one_three) is None
    assert not orthogonal(B, one, one_three)


def test_element_from_other_model_rejected(e0_2):
    with pytest.raises(ElementError):
        oplus(e0_2, e0_2.zero, make_horizontal_sum().one)
    with pytest.raises(ElementError):
        oplus(make_boolean(2), 0, 4)
    with pytest.raises(ElementError):
        oplus(e0_2, e0_2.zero, make_e0(3).a(0, 2))


def test_orthosupplement_examples(e0_2):
    for model in (e0_2, make_scale(), make_horizontal_sum(), make_boolean(2)):
        assert orthosupplement(model, model.zero) == model.one
    assert orthosupplement(e0_2, e0_2.a(4, 1)) == e0_2.b(4, 1)
    B = make_boolean(3)
    assert B.format(orthosupplement(B, B.parse("{1}"))) == "{2.3}"


def test_orthosupplement_missing_raises():
    broken = FiniteModel(["0", "x", "1"], 0, 2, {(0, 0): 0, (0, 1): 1, (1, 0): 1,
                                                  (0, 2): 2, (2, 0): 2})
    with pytest.raises(SupplementError) as info:
        orthosupplement(broken, 1)
    assert info.value.candidates == ()


def test_leq_ominus_trivial():
    for model, bound in [(make_e0(2), 3), (make_scale(), 4), (make_horizontal_sum(), 4),
                         (make_boolean(2), None)]:
        for x in model.window(bound):
            assert leq(model, model.zero, x)
            assert leq(model, x, model.one)
            assert ominus(model, x, model.zero) == x


def test_ominus_e0_brute_force(e0_2):
    a10, b20 = e0_2.a(1, 0), e0_2.b(2, 0)
    # independent scan over the window n <= 6
    solutions = [c for c in e0_2.window(6) if e0_2.oplus(a10, c) == b20]
    assert solutions == [e0_2.b(3, 0)]
    assert leq(e0_2, a10, b20)
    assert ominus(e0_2, b20, a10) == e0_2.b(3, 0)


def test_ominus_boolean():
    B = make_boolean(2)
    one, both = B.parse("{1}"), B.parse("{1.2}")
    assert leq(B, one, both)
    assert B.format(ominus(B, both, one)) == "{2}"
    assert ominus(B, one, both) is None


def test_ominus_ambiguity_reported():
    # x (+) x = 1 and x (+) y = 1: cancellation fails, two differences
    sums = {(0, i): i for i in range(4)} | {(i, 0): i for i in range(4)}
    sums |= {(1, 1): 3, (1, 2): 3, (2, 1): 3}
    broken = FiniteModel(["0", "x", "y", "1"], 0, 3, sums)
    result = ominus(broken, 3, 1)
    assert isinstance(result, Ambiguous)
    assert result.candidates == (1, 2)


def _set_axioms_hold(k):
    """EA1-EA4 on frozensets, evaluated without the package."""
    sup, _, add = set_ops(k)
    S = all_subsets(k)
    full = frozenset(range(1, k + 1))
    ok = all(add(a, b) == add(b, a) for a in S for b in S)
    for a, b, c in itertools.product(S, repeat=3):
        bc = add(b, c)
        if bc is not None and add(a, bc) is not None:
            ab = add(a, b)
            ok &= ab is not None and add(ab, c) == add(a, bc)
    ok &= all(sum(add(a, b) == full for b in S) == 1 for a in S)
    ok &= all(add(a, full) is None for a in S if a)
    return ok, len(S) ** 3


def test_audit_ea_boolean_k2():
    holds, triples = _set_axioms_hold(2)
    assert holds and triples == 64
    report = audit_ea(make_boolean(2))
    assert report.violations == []
    assert report.window_descriptor == "full carrier"


def test_audit_ea_e0_window(e0_2):
    report = audit_ea(e0_2, e0_2.window(4), e0_2.window_descriptor(4))
    assert report.ok
    assert report.window_descriptor == "n <= 4"


def test_audit_ea_fault_injection():
    B = make_boolean(2)
    sums = dict(B.sums)
    del sums[2, 1]  # {2} (+) {1} missing, {1} (+) {2} still defined
    broken = FiniteModel(B.labels, B.zero, B.one, sums)
    report = audit_ea(broken)
    ea1 = [v for v in report.violations if v.axiom == "EA1"]
    assert len(ea1) == 1
    assert ea1[0].witness == (1, 2)
    assert ea1[0].lhs == 3 and ea1[0].rhs is None


def test_audit_ea_detects_ea3_and_ea4():
    labels = ["0", "x", "1"]
    sums = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (0, 2): 2, (2, 0): 2, (1, 2): 2, (2, 1): 2}
    broken = FiniteModel(labels, 0, 2, sums)
    axioms = {v.axiom for v in audit_ea(broken).violations}
    assert {"EA3", "EA4"} <= axioms


def test_symbolic_window_required():
    with pytest.raises(ValueError):
        audit_ea(make_scale())


# -- invariants ------------------------------------------------------------

E0_MODEL = make_e0(3)


def e0_elements(max_n=40):
    def build(tag, n, m):
        return E0_MODEL.zero if tag == "0" else E0_MODEL.one if tag == "1" else \
            E0_MODEL.a(n, m) if tag == "a" else E0_MODEL.b(n, m)
    return st.builds(build, st.sampled_from("01ab"), st.integers(1, max_n), st.integers(0, 2))


@given(e0_elements(), e0_elements())
def test_e0_sum_symmetric(x, y):
    assert E0_MODEL.oplus(x, y) == E0_MODEL.oplus(y, x)


@given(e0_elements(), e0_elements(), e0_elements())
@settings(max_examples=300)
def test_e0_sum_associative(x, y, z):
    yz = E0_MODEL.oplus(y, z)
    if yz is not None and E0_MODEL.oplus(x, yz) is not None:
        xy = E0_MODEL.oplus(x, y)
        assert xy is not None
        assert E0_MODEL.oplus(xy, z) == E0_MODEL.oplus(x, yz)


@given(e0_elements())
def test_supplement_involution(x):
    s = orthosupplement(E0_MODEL, x)
    assert orthosupplement(E0_MODEL, s) == x
    assert oplus(E0_MODEL, x, s) == E0_MODEL.one


@pytest.mark.parametrize("model, bound", [(make_e0(2), 3), (make_scale(), 6),
                                          (make_horizontal_sum(), 5), (make_boolean(3), None)])
def test_orthogonal_iff_below_supplement(model, bound):
    W = model.window(bound)
    for a, b in itertools.product(W, repeat=2):
        assert orthogonal(model, a, b) == leq(model, a, orthosupplement(model, b))


def test_audit_deterministic():
    m = make_e0(3)
    first = audit_ea(m, m.window(3)).to_dict(m)
    second = audit_ea(m, list(reversed(m.window(3)))).to_dict(m)
    assert first == second
