"""Enumeration budgets.

Counting cycles of bounded length is exponential in the length cap, so
every enumerating operation draws from a shared budget and aborts with a
diagnostic instead of running away.  The default budget can be overridden
with the CYCLECON_BUDGET environment variable or per call.
"""

from __future__ import annotations

import os

from .errors import BudgetExceededError

DEFAULT_BUDGET = 2_000_000
MAX_CYCLE_LENGTH = 8
ENV_BUDGET = "CYCLECON_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(ENV_BUDGET)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_BUDGET} must be an integer, got {raw!r}")
    if value <= 0:
        raise ValueError(f"{ENV_BUDGET} must be positive, got {value}")
    return value


class CycleBudget:
    """Mutable spend counter shared across one logical operation."""

    def __init__(self, limit: int | None = None):
        self.limit = default_budget() if limit is None else int(limit)
        self.spent = 0

    def spend(self, amount: int = 1) -> None:
        self.spent += amount
        if self.spent > self.limit:
            raise BudgetExceededError(
                f"cycle enumeration budget exceeded: {self.spent} > {self.limit} "
                f"(raise --max-cycle-budget or {ENV_BUDGET})",
                count=self.spent,
            )


def as_budget(budget: int | CycleBudget | None) -> CycleBudget:
    if isinstance(budget, CycleBudget):
        return budget
    return CycleBudget(budget)


def check_cycle_length(k: int, minimum: int = 3, allow_large_k: bool = False) -> None:
    """Reject k below the relation's minimum or above the enumeration cap."""
    if k < minimum:
        raise ValueError(f"k must be >= {minimum}, got {k}")
    if k > MAX_CYCLE_LENGTH and not allow_large_k:
        raise ValueError(
            f"k={k} exceeds the default cap {MAX_CYCLE_LENGTH}; "
            "pass allow_large_k=True if you really want this"
        )
