"""The analytic pipeline bounding d in a Diophantine quintuple {a,b,c,d,e}.

With A = a, B = b, C = d, the gap lemma and 4b^2 < d give m >= 0.678 C^(1/4);
a linear-forms-in-logarithms estimate gives m / log(351 m) < 2.786e12 log^2 C.
Together they force

    C^(1/4) < 4.11e12 * log^2 C * log(238 C^(1/4)),

which fails for every C >= 10^76. Logarithms are natural throughout.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import mpmath

from quintuple.errors import ConfigurationError, DomainError, InputError


@dataclass(frozen=True)
class BoundConstants:
    gap_coeff: str = "0.48"
    lower_coeff: str = "0.678"
    matveev_coeff: str = "2.786e12"
    log_arg_coeff: int = 351
    combined_coeff: str = "4.11e12"
    combined_log_arg: str = "238"
    b_ratio: str = "0.5"

    def f(self, name: str) -> float:
        return float(getattr(self, name))


CONSTANTS = BoundConstants()

_LOWER = CONSTANTS.f("lower_coeff")
_MATVEEV = CONSTANTS.f("matveev_coeff")
_COMBINED = CONSTANTS.f("combined_coeff")
_COMBINED_ARG = CONSTANTS.f("combined_log_arg")

HIGH_PRECISION_DPS = 40


def lower_bound_m(C: float) -> float:
    """0.678 * C^(1/4)."""
    if C < 1:
        raise DomainError(f"need C >= 1, got {C}")
    return _LOWER * float(C) ** 0.25


def matveev_upper_holds(m: float, C: float) -> bool:
    """m / log(351 m) < 2.786e12 * log(C)^2."""
    arg = CONSTANTS.log_arg_coeff * m
    if arg <= 1:
        raise DomainError(f"log(351 m) must be positive, got 351 m = {arg}")
    if C <= 1:
        raise DomainError(f"need C > 1, got {C}")
    return m / math.log(arg) < _MATVEEV * math.log(C) ** 2


def _combined_sides(C) -> tuple[float, float]:
    log_c = math.log(C)
    quarter = math.exp(log_c / 4)
    return quarter, _COMBINED * log_c ** 2 * math.log(_COMBINED_ARG * quarter)


def _combined_sides_mp(C) -> tuple[mpmath.mpf, mpmath.mpf]:
    with mpmath.workdps(HIGH_PRECISION_DPS):
        c = mpmath.mpf(C)
        quarter = mpmath.root(c, 4)
        rhs = (mpmath.mpf(CONSTANTS.combined_coeff) * mpmath.log(c) ** 2
               * mpmath.log(mpmath.mpf(CONSTANTS.combined_log_arg) * quarter))
        return +quarter, +rhs


def combined_inequality_holds(C, precise: bool = False) -> bool:
    """C^(1/4) < 4.11e12 * log^2 C * log(238 C^(1/4)).

    ``C`` may be an int, float or decimal string. Equality counts as failure.
    ``precise`` switches from binary64 to 40-digit arithmetic.
    """
    if isinstance(C, str):
        precise = True
    if not precise and C <= 1:
        raise DomainError(f"need C > 1, got {C}")
    if precise:
        lhs, rhs = _combined_sides_mp(C)
        if lhs <= 1:
            raise DomainError(f"need C > 1, got {C}")
    else:
        lhs, rhs = _combined_sides(C)
    return bool(lhs < rhs)


@dataclass(frozen=True)
class BoundReport:
    c_star: float
    bracket_lo: float
    bracket_hi: float
    iterations: int
    verdict_at_10_76: bool

    @property
    def confirms_theorem(self) -> bool:
        return not self.verdict_at_10_76 and self.c_star < 1e76

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "BoundReport":
        return cls(**json.loads(text))


def solve_crossover(tolerance: float = 0.01, bracket: tuple[float, float] = (70.0, 80.0)) -> BoundReport:
    """Bisect in log10(C) for where the combined inequality stops holding.

    ``bracket`` is given in log10 units. The final endpoints are re-checked at
    40 digits; a disagreement with the binary64 verdict raises ArithmeticError.
    """
    if not 0 < tolerance <= 0.01:
        raise InputError(f"tolerance must lie in (0, 0.01], got {tolerance}")
    lo, hi = map(float, bracket)
    if not lo < hi:
        raise ConfigurationError(f"empty bracket [{lo}, {hi}]")

    def holds(x: float) -> bool:
        return combined_inequality_holds(10.0 ** x)

    if not holds(lo) or holds(hi):
        raise ConfigurationError(
            f"combined inequality does not flip on [1e{lo:g}, 1e{hi:g}]: "
            f"holds(lo)={holds(lo)}, holds(hi)={holds(hi)}"
        )
    width = math.log10(1 + tolerance)
    iterations = 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        if holds(mid):
            lo = mid
        else:
            hi = mid
        iterations += 1

    c_lo, c_hi = 10.0 ** lo, 10.0 ** hi
    if not combined_inequality_holds(repr(c_lo)) or combined_inequality_holds(repr(c_hi)):
        raise ArithmeticError(f"high-precision check disagrees on bracket [{c_lo}, {c_hi}]")
    return BoundReport(
        c_star=10.0 ** ((lo + hi) / 2),
        bracket_lo=c_lo,
        bracket_hi=c_hi,
        iterations=iterations,
        verdict_at_10_76=combined_inequality_holds(10 ** 76, precise=True),
    )


@dataclass(frozen=True)
class ConstantCheck:
    name: str
    claim: str
    holds: bool
    margin: float


def check_constant_consistency() -> list[ConstantCheck]:
    """Confirm the constants glue: 0.678 <= 0.48 sqrt 2, 4.11 >= 2.786/0.678, 238 >= 351 * 0.678.

    Uses outward-rounded intervals; a check passes only if the whole interval
    for the bound lies on the right side.
    """
    iv = mpmath.iv
    old = iv.prec
    iv.prec = 113
    try:
        gap, lower = iv.mpf(CONSTANTS.gap_coeff), iv.mpf(CONSTANTS.lower_coeff)
        matveev, combined = iv.mpf(CONSTANTS.matveev_coeff), iv.mpf(CONSTANTS.combined_coeff)
        arg, combined_arg = iv.mpf(CONSTANTS.log_arg_coeff), iv.mpf(CONSTANTS.combined_log_arg)
        # b < sqrt(C)/2 turns 0.48 sqrt(C/b) into 0.48 sqrt(2) C^(1/4)
        scaled_gap = gap * iv.sqrt(iv.mpf(1) / iv.mpf(CONSTANTS.b_ratio))
        pairs = [
            ("lower_coeff", "0.678 <= 0.48*sqrt(2)", scaled_gap, lower),
            ("combined_coeff", "2.786e12/0.678 <= 4.11e12", combined, matveev / lower),
            ("combined_log_arg", "351*0.678 <= 238", combined_arg, arg * lower),
        ]
        out = []
        for name, claim, big, small in pairs:
            out.append(ConstantCheck(name, claim, bool(big.a >= small.b),
                                     float(mpmath.mpf(big.a - small.b))))
        return out
    finally:
        iv.prec = old


def b_bound_from_gap(b: int, d: int) -> bool:
    """4 b^2 < d, exactly."""
    if b <= 0 or d <= 0:
        raise InputError(f"b and d must be positive, got b = {b}, d = {d}")
    return 4 * b * b < d


def scan_grid(lo: float = 70.0, hi: float = 80.0, points: int = 100) -> list[float]:
    """Log-spaced C values on [10^lo, 10^hi]."""
    step = (hi - lo) / (points - 1)
    return [10.0 ** (lo + i * step) for i in range(points)]
