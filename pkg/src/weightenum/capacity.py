"""Step budgets guarding the brute-force enumerations.

Every operation that enumerates codewords, group elements or composition
profiles estimates its elementary step count up front and refuses to start
when the estimate exceeds the budget.  The default budget keeps everything
at desk scale.
"""

DEFAULT_BUDGET = 10**8


class CapacityError(RuntimeError):
    """Raised when a requested computation exceeds its step budget."""


def check_budget(steps: int, budget: int = DEFAULT_BUDGET, what: str = "computation") -> None:
    if steps > budget:
        raise CapacityError(
            f"{what} needs about {steps} steps, over the budget of {budget}"
        )
