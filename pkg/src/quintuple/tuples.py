"""Diophantine tuple verification, regular extension and desk-scale enumeration.

A Diophantine m-tuple is a set of m distinct positive integers in which
the product of any two elements, plus one, is a perfect square.
"""

from __future__ import annotations

import itertools
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from quintuple.arith import as_square, isqrt
from quintuple.errors import DomainError, InputError


@dataclass(frozen=True, order=True)
class MTuple:
    elements: tuple[int, ...]

    def __post_init__(self):
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if len(els) < 2:
            raise InputError(f"a tuple needs at least two elements, got {len(els)}")
        for x in els:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InputError(f"element {x!r} is not an integer")
            if x <= 0:
                raise InputError(f"element {x} is not positive")
        for x, y in zip(els, els[1:]):
            if x >= y:
                raise InputError(f"elements must be strictly increasing: {x} >= {y}")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __str__(self) -> str:
        return "{" + ", ".join(map(str, self.elements)) + "}"


@dataclass(frozen=True)
class VerificationReport:
    tuple: MTuple
    failing_pairs: tuple[tuple[int, int], ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failing_pairs

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        return {
            "elements": list(self.tuple.elements),
            "verified": self.ok,
            "failing_pairs": [list(p) for p in self.failing_pairs],
        }


@dataclass(frozen=True)
class TripleRST:
    a: int
    b: int
    c: int
    r: int
    s: int
    t: int


def _as_mtuple(t: MTuple | Iterable[int]) -> MTuple:
    return t if isinstance(t, MTuple) else MTuple(tuple(t))


def verify_tuple(t: MTuple | Iterable[int]) -> VerificationReport:
    """Check every pairwise product plus one for squareness.

    Raises InputError if the elements are not positive and strictly increasing.
    """
    t = _as_mtuple(t)
    failing = tuple(
        (x, y)
        for x, y in itertools.combinations(t.elements, 2)
        if as_square(x * y + 1) is None
    )
    return VerificationReport(t, failing)


def triple_rst(a: int, b: int, c: int) -> TripleRST:
    """Return the triple with the square roots of ab+1, ac+1 and bc+1 attached."""
    MTuple((a, b, c))
    roots = []
    for x, y in ((a, b), (a, c), (b, c)):
        root = as_square(x * y + 1)
        if root is None:
            raise DomainError(f"{{{a}, {b}, {c}}} is not a Diophantine triple: {x}*{y}+1 = {x * y + 1} is not a square")
        roots.append(root)
    return TripleRST(a, b, c, *roots)


def regular_extension(a: int, b: int, c: int) -> int:
    """The larger regular extension d+ = a + b + c + 2abc + 2rst."""
    trip = triple_rst(a, b, c)
    return a + b + c + 2 * a * b * c + 2 * trip.r * trip.s * trip.t


# ---------------------------------------------------------------------------
# Enumeration over the pair graph
# ---------------------------------------------------------------------------


@lru_cache(maxsize=8)
def pair_graph(limit: int) -> dict[int, tuple[int, ...]]:
    """Map each a <= limit to the sorted b in (a, limit] with ab+1 a square.

    Walks the square roots r instead of the partners b: b = (r^2 - 1)/a, with
    r = a + 1 giving the smallest admissible partner b = a + 2.
    """
    graph: dict[int, tuple[int, ...]] = {}
    for a in range(1, limit + 1):
        top = isqrt(a * limit + 1)
        nbrs = []
        for r in range(a + 1, top + 1):
            q, rem = divmod(r * r - 1, a)
            if rem == 0:
                nbrs.append(q)
        graph[a] = tuple(nbrs)
    return graph


def _extend(prefix: list[int], cands: tuple[int, ...], size: int,
            graph: dict[int, tuple[int, ...]], out: list[MTuple]) -> None:
    if len(prefix) == size:
        out.append(MTuple(tuple(prefix)))
        return
    need = size - len(prefix)
    for i, x in enumerate(cands):
        if len(cands) - i < need:
            break
        if need == 1:
            out.append(MTuple((*prefix, x)))
            continue
        adj = set(graph[x])
        rest = tuple(y for y in cands[i + 1:] if y in adj)
        prefix.append(x)
        _extend(prefix, rest, size, graph, out)
        prefix.pop()


def _tuples_from(args: tuple[int, int, int]) -> list[MTuple]:
    limit, size, first = args
    graph = pair_graph(limit)
    out: list[MTuple] = []
    _extend([first], graph[first], size, graph, out)
    return out


def enumerate_tuples(limit: int, size: int, jobs: int = 1) -> list[MTuple]:
    """All Diophantine tuples of ``size`` elements with max element <= ``limit``.

    Results are in lexicographic order regardless of ``jobs``.
    """
    if limit < 3:
        raise InputError(f"limit must be at least 3, got {limit}")
    if not 2 <= size <= 5:
        raise InputError(f"size must be between 2 and 5, got {size}")
    work = [(limit, size, a) for a in range(1, limit + 1)]
    if jobs <= 1:
        parts = map(_tuples_from, work)
        return [t for part in parts for t in part]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = pool.map(_tuples_from, work, chunksize=max(1, limit // (4 * jobs)))
        return [t for part in parts for t in part]


def spot_check_enumeration(limit: int, size: int, found: Sequence[MTuple],
                           samples: int, rng: random.Random) -> list[MTuple]:
    """Randomized search for verified tuples missing from ``found``.

    For a random first element, partners are found by direct square tests
    (independently of the pair graph) and greedily grown into a random tuple.
    Returns the counterexamples, normally none.
    """
    known = set(found)
    missing: list[MTuple] = []
    for _ in range(samples):
        a = rng.randint(1, limit)
        partners = [x for x in range(a + 1, limit + 1) if as_square(a * x + 1) is not None]
        rng.shuffle(partners)
        chosen = [a]
        for x in partners:
            if len(chosen) == size:
                break
            if all(as_square(x * y + 1) is not None for y in chosen):
                chosen.append(x)
        if len(chosen) < size:
            continue
        cand = MTuple(tuple(sorted(chosen)))
        if verify_tuple(cand).ok and cand not in known:
            missing.append(cand)
    return missing


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def format_lines(tuples: Iterable[MTuple]) -> str:
    """One tuple per line, elements separated by single spaces."""
    return "".join(" ".join(map(str, t.elements)) + "\n" for t in tuples)


def parse_lines(text: str) -> list[MTuple]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            out.append(MTuple(tuple(int(tok) for tok in line.split())))
    return out


def to_json(tuples: Iterable[MTuple]) -> str:
    return json.dumps([list(t.elements) for t in tuples])


def from_json(text: str) -> list[MTuple]:
    return [MTuple(tuple(item)) for item in json.loads(text)]
