"""Exception types shared across the package.

The CLI maps these onto its exit-code contract, so raise the most
specific one that applies.
"""


class CycleconError(Exception):
    """Base class for all cyclecon errors."""


class GraphConstructionError(CycleconError):
    """Invalid graph input: endpoint out of range, or loop/duplicate in strict mode."""


class PajekParseError(CycleconError):
    """Malformed network/partition file."""


class BudgetExceededError(CycleconError):
    """Cycle/subgraph enumeration hit the configured budget."""

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count


class ConsistencyError(CycleconError):
    """An internal identity failed; indicates a bug, not bad input."""


class PathRemovalError(CycleconError):
    """Arc sequence is not a removable transitive path."""


class OracleGuardError(CycleconError):
    """Input too large for a brute-force oracle."""
