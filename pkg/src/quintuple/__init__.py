"""Diophantine tuples, Pellian intersections and the quintuple bound d < 10^76."""

from quintuple.bounds import (
    BoundReport,
    check_constant_consistency,
    combined_inequality_holds,
    solve_crossover,
)
from quintuple.errors import ConfigurationError, DomainError, HypothesisError, InputError
from quintuple.pell import find_intersections, generate_sequence, make_pell_triple
from quintuple.tuples import MTuple, enumerate_tuples, regular_extension, verify_tuple

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ConfigurationError",
    "DomainError",
    "HypothesisError",
    "InputError",
    "MTuple",
    "check_constant_consistency",
    "combined_inequality_holds",
    "enumerate_tuples",
    "find_intersections",
    "generate_sequence",
    "make_pell_triple",
    "regular_extension",
    "solve_crossover",
    "verify_tuple",
    "__version__",
]
