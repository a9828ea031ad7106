"""Exception types shared across the library and the CLI."""


class ParseError(ValueError):
    """A text input does not match one of the documented formats."""


class PreconditionError(ValueError):
    """An operation was applied outside its stated domain."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured element budget."""
