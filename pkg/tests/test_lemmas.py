import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quintuple.errors import DomainError, HypothesisError, InputError
from quintuple.lemmas import (
    AuditReport,
    LemmaContext,
    audit_triples,
    audit_witnesses,
    congruence_holds,
    exceeds_gap_bound,
    gap_lower_bound,
    gap_m_floor,
    index_relation_holds,
    proof_step_inequality,
)
from quintuple.pell import find_intersections, make_pell_triple


def exact_final_step(B, C):
    # 0.96 sqrt(BC+1) sqrt(C/B) + 0.173 C/B < C, decided over the rationals by squaring
    rest = C - Fraction(173, 1000) * C / B
    if rest <= 0:
        return False
    return Fraction(96, 100) ** 2 * (B * C + 1) * Fraction(C, B) < rest ** 2


@pytest.mark.parametrize("m, n, expected", [(1, 1, True), (3, 2, True), (5, 2, False), (0, 0, True), (1, 2, False)])
def test_index_relation(m, n, expected):
    assert index_relation_holds(m, n) is expected


def test_index_relation_negative():
    with pytest.raises(InputError):
        index_relation_holds(-1, 0)


@pytest.mark.parametrize("m, n, lam, expected", [(1, 1, -1, True), (2, 1, -1, True), (3, 1, 1, False)])
def test_congruence_examples(m, n, lam, expected):
    ctx = LemmaContext(1, 3, 8, 3, 5, m, n, lam)
    assert congruence_holds(ctx) is expected


def test_context_validates_roots():
    with pytest.raises(DomainError):
        LemmaContext(1, 3, 8, 4, 5, 1, 1, -1)
    with pytest.raises(InputError):
        LemmaContext(1, 3, 8, 3, 5, 1, 1, 0)


def test_gap_lower_bound_examples():
    assert gap_lower_bound(8, 10 ** 6) == pytest.approx(480 / math.sqrt(8), rel=1e-12)
    assert gap_lower_bound(8, 10 ** 6) == pytest.approx(169.705627484771, rel=1e-12)
    assert gap_lower_bound(100, 10 ** 8) == pytest.approx(480.0, rel=1e-12)


@pytest.mark.parametrize("k", [6, 42, 6000, 6 * 10 ** 9])
def test_gap_lower_bound_inverse(k):
    # C = k^2 B / 0.48^2 = 625 k^2 / 18 at B = 8, an integer when 6 | k
    B = 8
    C = Fraction(k * k * B) / Fraction(48, 100) ** 2
    assert C.denominator == 1
    assert gap_lower_bound(B, int(C)) == pytest.approx(k, rel=1e-12)


def test_gap_lower_bound_hypothesis():
    with pytest.raises(HypothesisError) as exc:
        gap_lower_bound(7, 1000)
    assert exc.value.hypothesis == "B >= 8"
    with pytest.raises(DomainError):
        gap_lower_bound(8, 8)


def test_exceeds_gap_bound_exact():
    # 0.48 sqrt(C/B) = 480 exactly at B = 100, C = 10^8
    assert not exceeds_gap_bound(480, 100, 10 ** 8)
    assert exceeds_gap_bound(481, 100, 10 ** 8)
    assert gap_m_floor(100, 10 ** 8) == 480


@pytest.mark.parametrize("B, C, holds, approx", [
    (8, 1000, True, 981.685),
    (2, 1000, False, 1046.740),
    (8, 8, True, 7.9128),
])
def test_proof_step_examples(B, C, holds, approx):
    tr = proof_step_inequality(B, C)
    assert tr.holds is holds
    assert tr.lhs_upper == pytest.approx(approx, rel=1e-4)
    assert tr.bm2_le_quarter_c and tr.tm_lt_half_c


def test_proof_step_upper_rounding():
    # the reported left side is never below the true value
    for B, C in [(8, 1000), (2, 1000), (8, 8), (13, 10 ** 40)]:
        exact = 0.96 * math.sqrt(B * C + 1) * math.sqrt(C / B) + 0.173 * C / B
        assert proof_step_inequality(B, C).lhs_upper >= exact * (1 - 1e-15)


def test_proof_step_bad_input():
    with pytest.raises(InputError):
        proof_step_inequality(0, 10)
    with pytest.raises(InputError):
        proof_step_inequality(10, 9)


@given(st.integers(min_value=1, max_value=10 ** 12), st.integers(min_value=0, max_value=10 ** 60))
def test_proof_step_agrees_with_rationals(B, extra):
    C = B + extra
    assert proof_step_inequality(B, C).holds == exact_final_step(B, C)


@given(st.integers(min_value=8, max_value=10 ** 10), st.integers(min_value=0, max_value=10 ** 80))
def test_proof_step_holds_for_b_ge_8(B, extra):
    tr = proof_step_inequality(B, B + extra)
    assert tr.holds and tr.bm2_le_quarter_c and tr.tm_lt_half_c and tr.chain_lt_c


def test_audit_fermat():
    pt = make_pell_triple(1, 3, 8)
    rep = audit_witnesses(pt, find_intersections(pt, 10))
    assert rep.ok and len(rep.entries) == 1
    e = rep.entries[0]
    assert (e.m, e.n, e.D) == (1, 1, 120)
    assert e.index_relation and e.congruence and e.quadruple_verified
    assert not e.gap_applicable and e.gap_holds is None


def test_audit_empty():
    rep = audit_witnesses(make_pell_triple(1, 3, 8), [])
    assert rep.ok and rep.entries == []


def test_audit_corpus():
    rep = audit_triples(200, 20)
    assert rep.ok, rep.violations
    assert rep.triples == 184 and len(rep.entries) > 100
    assert all(e.congruence and e.index_relation for e in rep.entries)


def test_audit_flags_violation():
    from quintuple.pell import IntersectionWitness
    pt = make_pell_triple(1, 3, 8)
    fake = IntersectionWitness(1, 3, 8, 6, 2, 31, 1, 120)
    rep = audit_witnesses(pt, [fake])
    assert not rep.ok
    reasons = {v for _, v in rep.violations}
    assert "index relation n <= m <= 2n" in reasons
    assert isinstance(rep, AuditReport) and rep.summary()["violations"] == len(rep.violations)
