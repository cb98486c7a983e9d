"""Work accounting. One unit is one weight evaluation."""

from __future__ import annotations

import os

from .errors import BudgetExceeded

DEFAULT_BUDGET = 10**8
MIN_BUDGET = 10**4


def default_budget() -> int:
    env = os.environ.get("CODEDIST_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class Budget:
    """A shared counter of weight evaluations with a hard ceiling."""

    def __init__(self, limit: int | None = None):
        self.limit = default_budget() if limit is None else int(limit)
        self.spent = 0

    def __repr__(self):
        return f"Budget(spent={self.spent}, limit={self.limit})"

    @property
    def remaining(self) -> int:
        return self.limit - self.spent

    def fits(self, n: int) -> bool:
        return n <= self.remaining

    def require(self, n: int, what: str = "") -> None:
        if n > self.remaining:
            raise BudgetExceeded(n, self.remaining, what)

    def charge(self, n: int, what: str = "") -> None:
        n = int(n)
        self.require(n, what)
        self.spent += n


def as_budget(budget) -> Budget:
    if budget is None:
        return Budget()
    if isinstance(budget, Budget):
        return budget
    return Budget(budget)
