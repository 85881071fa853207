"""Order limit for operations that enumerate vertex subsets."""

DEFAULT_BUDGET = 18


class BudgetExceeded(RuntimeError):
    """Graph too large for an exhaustive subset enumeration."""

    def __init__(self, n: int, budget: int, what: str = "enumeration"):
        super().__init__(f"{what} on {n} vertices exceeds budget {budget}")
        self.n = n
        self.budget = budget


def check_budget(n: int, budget: int | None, what: str = "enumeration") -> None:
    limit = DEFAULT_BUDGET if budget is None else budget
    if n > limit:
        raise BudgetExceeded(n, limit, what)
