"""Exact integer primitives: floor square roots and perfect-square certification."""

from __future__ import annotations

import math

# Quadratic residues modulo a few small moduli. A square must be a residue
# modulo each, so most non-squares are rejected before any square root.
_FILTERS = tuple(
    (mod, frozenset(i * i % mod for i in range(mod))) for mod in (64, 63, 65, 11)
)


def isqrt(n: int) -> int:
    """Return the largest r with r*r <= n."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    return math.isqrt(n)


def is_square_candidate(n: int) -> bool:
    """Cheap necessary condition for ``n`` to be a perfect square."""
    return all(n % mod in residues for mod, residues in _FILTERS)


def as_square(n: int) -> int | None:
    """Return ``r`` with ``r*r == n``, or None when ``n`` is not a perfect square."""
    if n < 0 or not is_square_candidate(n):
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def is_square(n: int) -> bool:
    return as_square(n) is not None
