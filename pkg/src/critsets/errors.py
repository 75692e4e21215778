"""Exception types shared across the package."""


class GraphParseError(ValueError):
    """Raised when edge-list or graph6 input cannot be decoded."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ValueError):
    """An argument violates the documented contract of an operation."""


class BudgetExceeded(RuntimeError):
    """An enumeration produced more items than its budget allows.

    Enumerations never truncate silently; callers either propagate this or
    mark their result as partial.
    """

    def __init__(self, what: str, budget: int):
        self.what = what
        self.budget = budget
        super().__init__(f"{what}: more than {budget} items")


class IndeterminateError(RuntimeError):
    """A yes/no question could not be settled within the given budget."""


class InvariantViolation(AssertionError):
    """A proven inequality or lemma failed. This always indicates a bug."""

    def __init__(self, message: str, witness: dict | None = None):
        self.witness = witness or {}
        super().__init__(message)


class SearchError(RuntimeError):
    """A search run cannot start, resume, or persist its output."""
