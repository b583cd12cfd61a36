from __future__ import annotations


class BudgetExceeded(RuntimeError):
    """An enumeration would visit more tuples than the configured budget."""

    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} tuples, budget is {budget}")


class NotDirectError(ValueError):
    """A collection whose sumset was required to be direct is not."""

    def __init__(self, witness, message: str | None = None):
        self.witness = witness
        super().__init__(message or f"sumset is not direct: {witness}")


class NotAdditiveSystemError(ValueError):
    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(message)


class NotFactorableError(ValueError):
    pass


class InconsistencyError(RuntimeError):
    """A trajectory violated a monotonicity property that must always hold."""
