"""Solution sequences of the Pellian pair attached to a Diophantine triple.

For a triple {A, B, C} with AB+1 = R^2, AC+1 = S^2, BC+1 = T^2, extending to
a quadruple {A, B, C, D} means solving

    A z^2 - C x^2 = A - C,      B z^2 - C y^2 = B - C,

with D = (z^2 - 1)/C. Solutions of the first equation come in classes
v_0 = z0, v_1 = S z0 + C x0, v_{i+2} = 2S v_{i+1} - v_i, and of the second in
w_0 = z1, w_1 = T z1 + C y1, w_{i+2} = 2T w_{i+1} - w_i. Only the classes with
z0, z1 in {+1, -1} and x0 = y1 = 1 are modelled.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from quintuple.arith import as_square
from quintuple.errors import DomainError, InputError
from quintuple.tuples import triple_rst

KINDS = ("V", "W")


@dataclass(frozen=True)
class PellTriple:
    A: int
    B: int
    C: int
    R: int
    S: int
    T: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.A, self.B, self.C)


def make_pell_triple(a: int, b: int, c: int) -> PellTriple:
    """Attach certified R, S, T to the Diophantine triple {a, b, c}."""
    trip = triple_rst(a, b, c)
    return PellTriple(a, b, c, trip.r, trip.s, trip.t)


def _kind(kind: str) -> str:
    k = kind.upper()
    if k not in KINDS:
        raise InputError(f"kind must be V or W, got {kind!r}")
    return k


def _sign(z_init: int) -> int:
    if z_init not in (1, -1):
        raise InputError(f"initial term must be +1 or -1, got {z_init}")
    return z_init


@dataclass
class PellSequence:
    """Binary recurrence z_{i+2} = coeff * z_{i+1} - z_i, extended on demand."""

    pt: PellTriple
    kind: str
    z_init: int
    companion_init: int = 1
    terms: list[int] = field(default_factory=list)

    def __post_init__(self):
        self.kind = _kind(self.kind)
        _sign(self.z_init)
        if not self.terms:
            root = self.pt.S if self.kind == "V" else self.pt.T
            self.terms = [self.z_init, root * self.z_init + self.pt.C * self.companion_init]

    @property
    def coeff(self) -> int:
        return 2 * (self.pt.S if self.kind == "V" else self.pt.T)

    def extend(self, count: int) -> list[int]:
        """Make sure at least ``count`` terms are cached; return the cache."""
        terms, k = self.terms, self.coeff
        while len(terms) < count:
            terms.append(k * terms[-1] - terms[-2])
        return terms

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        return self.extend(i + 1)[i]

    def head(self, count: int) -> list[int]:
        return list(self.extend(count)[:count])


def generate_sequence(pt: PellTriple, kind: str, z_init: int, count: int) -> PellSequence:
    if count < 1:
        raise InputError(f"count must be positive, got {count}")
    seq = PellSequence(pt, kind, z_init)
    seq.extend(count)
    if len(seq.terms) > count:
        del seq.terms[count:]
    return seq


def pell_companion(pt: PellTriple, kind: str, z: int) -> int | None:
    """Non-negative x (kind V) or y (kind W) solving the matching equation for ``z``.

    V: A z^2 - C x^2 = A - C, i.e. C x^2 = A (z^2 - 1) + C.
    W: B z^2 - C y^2 = B - C.
    """
    coef = pt.A if _kind(kind) == "V" else pt.B
    num = coef * (z * z - 1) + pt.C
    q, rem = divmod(num, pt.C)
    if rem:
        return None
    return as_square(q)


def check_pell_term(pt: PellTriple, kind: str, z: int) -> tuple[bool, int | None]:
    """Whether ``z`` solves the V (or W) equation, with the companion if it does."""
    comp = pell_companion(pt, kind, z)
    return comp is not None, comp


@dataclass(frozen=True)
class IntersectionWitness:
    """A common value v_j = w_k = z of the two sequences in sign class ``lam``."""

    A: int
    B: int
    C: int
    j: int
    k: int
    z: int
    lam: int
    D: int

    @property
    def even(self) -> bool:
        return self.j % 2 == 0 and self.k % 2 == 0

    @property
    def m(self) -> int | None:
        return self.j // 2 if self.j % 2 == 0 else None

    @property
    def n(self) -> int | None:
        return self.k // 2 if self.k % 2 == 0 else None

    @property
    def is_new_element(self) -> bool:
        return self.D > 0 and self.D not in (self.A, self.B, self.C)

    def to_dict(self) -> dict:
        return {
            "A": self.A, "B": self.B, "C": self.C,
            "j": self.j, "k": self.k, "m": self.m, "n": self.n,
            "lambda": self.lam, "z": self.z, "D": self.D,
        }

    @classmethod
    def from_dict(cls, rec: dict) -> "IntersectionWitness":
        return cls(rec["A"], rec["B"], rec["C"], rec["j"], rec["k"], rec["z"], rec["lambda"], rec["D"])


@dataclass(frozen=True)
class IntersectionResult:
    pt: PellTriple
    max_index: int
    witnesses: tuple[IntersectionWitness, ...]

    @property
    def anomalies(self) -> tuple[IntersectionWitness, ...]:
        """Witnesses at odd indices, where the even-index conditions would fail."""
        return tuple(w for w in self.witnesses if not w.even)

    def __iter__(self):
        return iter(self.witnesses)

    def __len__(self) -> int:
        return len(self.witnesses)


def _merge(v: list[int], w: list[int]) -> Iterable[tuple[int, int]]:
    """Index pairs (i, k) with v[i] == w[k]; both lists strictly increasing."""
    i = k = 0
    while i < len(v) and k < len(w):
        if v[i] == w[k]:
            yield i, k
            i += 1
            k += 1
        elif v[i] < w[k]:
            i += 1
        else:
            k += 1


def find_intersections(pt: PellTriple, max_index: int) -> IntersectionResult:
    """All v_j = w_k with 1 <= j, k <= max_index and |z| > 1, for z0 = z1 = +-1.

    Odd-index coincidences are kept and surfaced through ``anomalies``.
    """
    if max_index < 2:
        raise InputError(f"max_index must be at least 2, got {max_index}")
    found = []
    for lam in (1, -1):
        v = PellSequence(pt, "V", lam).extend(max_index + 1)
        w = PellSequence(pt, "W", lam).extend(max_index + 1)
        # index 0 holds z = lam, so the merge starts on the monotone tails
        for i, k in _merge(v[1:], w[1:]):
            z = v[i + 1]
            if abs(z) <= 1:
                continue
            D, rem = divmod(z * z - 1, pt.C)
            if rem:
                raise DomainError(f"C = {pt.C} does not divide z^2 - 1 for z = {z}")
            found.append(IntersectionWitness(pt.A, pt.B, pt.C, i + 1, k + 1, z, lam, D))
    found.sort(key=lambda wt: (abs(wt.z), wt.j, wt.k, -wt.lam))
    return IntersectionResult(pt, max_index, tuple(found))


def witnesses_to_json(witnesses: Iterable[IntersectionWitness]) -> str:
    return json.dumps([w.to_dict() for w in witnesses])


def witnesses_from_json(text: str) -> list[IntersectionWitness]:
    return [IntersectionWitness.from_dict(rec) for rec in json.loads(text)]
