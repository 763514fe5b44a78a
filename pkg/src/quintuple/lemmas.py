"""Executable checks for the index relation and the gap lower bound on m.

The gap bound says: if B >= 8 and v_{2m} = w_{2n} with m >= 3, n >= 2, then
m > 0.48 * sqrt(C / B). Its argument runs through the congruence

    A m^2 + lam S m == B n^2 + lam T n   (mod 4C)

and ends with 0.96 sqrt(BC+1) sqrt(C/B) + 0.173 C/B < C. Every step that
involves a decimal constant is checked either exactly over the integers or
with outward-rounded interval arithmetic, so a True verdict is rigorous.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable

import mpmath

from quintuple.arith import isqrt
from quintuple.errors import DomainError, HypothesisError, InputError
from quintuple.pell import IntersectionWitness, PellTriple, find_intersections, make_pell_triple
from quintuple.tuples import enumerate_tuples, verify_tuple

GAP_COEFF = "0.48"


@dataclass(frozen=True)
class LemmaContext:
    A: int
    B: int
    C: int
    S: int
    T: int
    m: int
    n: int
    lam: int

    def __post_init__(self):
        if self.S * self.S != self.A * self.C + 1:
            raise DomainError(f"S^2 != AC+1 for S={self.S}, A={self.A}, C={self.C}")
        if self.T * self.T != self.B * self.C + 1:
            raise DomainError(f"T^2 != BC+1 for T={self.T}, B={self.B}, C={self.C}")
        if self.m < 0 or self.n < 0:
            raise InputError("m and n must be non-negative")
        if self.lam not in (1, -1):
            raise InputError(f"lambda must be +1 or -1, got {self.lam}")

    @classmethod
    def from_witness(cls, pt: PellTriple, w: IntersectionWitness) -> "LemmaContext":
        if not w.even:
            raise DomainError(f"witness (j={w.j}, k={w.k}) has an odd index")
        return cls(pt.A, pt.B, pt.C, pt.S, pt.T, w.m, w.n, w.lam)

    def gap_hypotheses(self) -> bool:
        return self.B >= 8 and self.m >= 3 and self.n >= 2


def index_relation_holds(m: int, n: int) -> bool:
    """n <= m <= 2n."""
    if m < 0 or n < 0:
        raise InputError("m and n must be non-negative")
    return n <= m <= 2 * n


def congruence_holds(ctx: LemmaContext) -> bool:
    lhs = ctx.A * ctx.m ** 2 + ctx.lam * ctx.S * ctx.m
    rhs = ctx.B * ctx.n ** 2 + ctx.lam * ctx.T * ctx.n
    return (lhs - rhs) % (4 * ctx.C) == 0


def gap_lower_bound(B: int, C: int) -> float:
    """The threshold 0.48 * B^(-1/2) * C^(1/2) that m must exceed."""
    if B < 8:
        raise HypothesisError("B >= 8", f"gap bound needs B >= 8, got B = {B}")
    if C <= B:
        raise DomainError(f"need C > B, got B = {B}, C = {C}")
    with mpmath.workdps(30):
        return float(mpmath.mpf(GAP_COEFF) * mpmath.sqrt(mpmath.mpf(C) / B))


def exceeds_gap_bound(m: int, B: int, C: int) -> bool:
    """Exact test of m > 0.48 sqrt(C/B), i.e. 10000 B m^2 > 2304 C."""
    return 10000 * B * m * m > 2304 * C


def gap_m_floor(B: int, C: int) -> int:
    """floor(0.48 sqrt(C/B)), computed exactly."""
    return isqrt(2304 * C // (10000 * B))


@dataclass(frozen=True)
class ProofStepTrace:
    B: int
    C: int
    holds: bool
    lhs_upper: float
    m: int
    bm2_le_quarter_c: bool
    tm_lt_half_c: bool
    chain_lt_c: bool

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return asdict(self)


def proof_step_inequality(B: int, C: int) -> ProofStepTrace:
    """Check 0.96 sqrt(BC+1) sqrt(C/B) + 0.173 C/B < C with the left side rounded up.

    The trace also records, at m = floor(0.48 sqrt(C/B)), the majorizations
    B m^2 <= C/4 and T m < C/2 (T = sqrt(BC+1)), and whether the intermediate
    bound 2 T m + 0.75 m^2 already sits below C. Those three are exact.
    """
    if B < 1:
        raise InputError(f"B must be positive, got {B}")
    if C < B:
        raise InputError(f"need C >= B, got B = {B}, C = {C}")
    prec = max(128, (B * C + 1).bit_length() + 64)
    iv = mpmath.iv
    with mpmath.workprec(prec):
        old = iv.prec
        iv.prec = prec
        try:
            Bi, Ci = iv.mpf(B), iv.mpf(C)
            lhs = (iv.mpf("0.96") * iv.sqrt(Bi * Ci + 1) * iv.sqrt(Ci) / iv.sqrt(Bi)
                   + iv.mpf("0.173") * Ci / Bi)
            holds = lhs.b < Ci.a
            lhs_upper = float(mpmath.mpf(lhs.b))
        finally:
            iv.prec = old

    m = gap_m_floor(B, C)
    T2 = B * C + 1
    return ProofStepTrace(
        B=B,
        C=C,
        holds=bool(holds),
        lhs_upper=lhs_upper,
        m=m,
        bm2_le_quarter_c=4 * B * m * m <= C,
        tm_lt_half_c=4 * m * m * T2 < C * C,
        # 2 T m + 3 m^2 / 4 < C  <=>  64 m^2 T^2 < (4C - 3 m^2)^2, with 4C > 3 m^2
        chain_lt_c=4 * C > 3 * m * m and 64 * m * m * T2 < (4 * C - 3 * m * m) ** 2,
    )


# ---------------------------------------------------------------------------
# Auditing intersection witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WitnessAudit:
    A: int
    B: int
    C: int
    j: int
    k: int
    m: int | None
    n: int | None
    lam: int
    z: int
    D: int
    even: bool
    index_relation: bool | None
    congruence: bool | None
    gap_applicable: bool
    gap_holds: bool | None
    quadruple_verified: bool | None

    @property
    def violations(self) -> list[str]:
        out = []
        if not self.even:
            out.append("odd index")
        if self.index_relation is False:
            out.append("index relation n <= m <= 2n")
        if self.congruence is False:
            out.append("congruence mod 4C")
        if self.gap_holds is False:
            out.append("gap bound m > 0.48 sqrt(C/B)")
        if self.quadruple_verified is False:
            out.append("quadruple {A,B,C,D} does not verify")
        return out


@dataclass
class AuditReport:
    entries: list[WitnessAudit] = field(default_factory=list)
    triples: int = 0

    @property
    def violations(self) -> list[tuple[WitnessAudit, str]]:
        return [(e, v) for e in self.entries for v in e.violations]

    @property
    def ok(self) -> bool:
        return not self.violations

    def extend(self, other: "AuditReport") -> None:
        self.entries.extend(other.entries)
        self.triples += other.triples

    def summary(self) -> dict:
        return {
            "triples": self.triples,
            "witnesses": len(self.entries),
            "gap_applicable": sum(e.gap_applicable for e in self.entries),
            "violations": len(self.violations),
            "ok": self.ok,
        }

    def to_dict(self) -> dict:
        return {
            **self.summary(),
            "entries": [{**asdict(e), "violations": e.violations} for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def audit_witness(pt: PellTriple, w: IntersectionWitness) -> WitnessAudit:
    quad = verify_tuple(sorted((pt.A, pt.B, pt.C, w.D))).ok if w.is_new_element else None
    if not w.even:
        return WitnessAudit(pt.A, pt.B, pt.C, w.j, w.k, None, None, w.lam, w.z, w.D,
                            False, None, None, False, None, quad)
    ctx = LemmaContext.from_witness(pt, w)
    applicable = ctx.gap_hypotheses()
    return WitnessAudit(
        pt.A, pt.B, pt.C, w.j, w.k, w.m, w.n, w.lam, w.z, w.D,
        even=True,
        index_relation=index_relation_holds(w.m, w.n),
        congruence=congruence_holds(ctx),
        gap_applicable=applicable,
        gap_holds=exceeds_gap_bound(w.m, pt.B, pt.C) if applicable else None,
        quadruple_verified=quad,
    )


def audit_witnesses(pt: PellTriple, witnesses: Iterable[IntersectionWitness]) -> AuditReport:
    return AuditReport([audit_witness(pt, w) for w in witnesses], triples=1)


def audit_triples(c_max: int, max_index: int) -> AuditReport:
    """Audit every Diophantine triple with largest element <= c_max."""
    report = AuditReport()
    for trip in enumerate_tuples(c_max, 3):
        pt = make_pell_triple(*trip.elements)
        report.extend(audit_witnesses(pt, find_intersections(pt, max_index)))
    return report
