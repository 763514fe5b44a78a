"""Exception types shared by the package."""


class InputError(ValueError):
    """Malformed input: non-increasing tuples, zero elements, bad arguments."""


class DomainError(ValueError):
    """Well-formed input that lies outside an operation's mathematical domain."""


class HypothesisError(DomainError):
    """A lemma hypothesis (for instance B >= 8) is not met."""

    def __init__(self, hypothesis: str, message: str | None = None):
        self.hypothesis = hypothesis
        super().__init__(message or f"hypothesis violated: {hypothesis}")


class ConfigurationError(ValueError):
    """Solver configuration cannot produce a result, e.g. a bracket with no sign change."""
