"""Exception types shared across the package."""


class DomainError(ValueError):
    """A set or parameter lies outside the space an operation is defined on."""


class BudgetError(ValueError):
    """An oracle budget cannot accommodate the input set."""
