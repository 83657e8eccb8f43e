"""Exception types shared across the package."""


class InputDomainError(ValueError):
    """An argument violates a documented precondition."""


class GraphParseError(InputDomainError):
    """Malformed edge-list text; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class InternalConsistencyError(RuntimeError):
    """Internally produced data broke an invariant (a bug, not bad input)."""


class BenchDisagreementError(RuntimeError):
    """The three homology algorithms disagreed on a benchmark graph."""
