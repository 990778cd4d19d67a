"""Exception types shared across the package.

FormatError means the input text or JSON could not be understood at all.
DomainError means the input parsed fine but violates a mathematical
precondition (not stable, not recurrent, not an EW-tableau, and so on).
BudgetError is the explicit refusal raised by enumeration oracles when the
requested search would exceed their work budget.
"""


class FormatError(ValueError):
    """Malformed textual or JSON input."""


class DomainError(ValueError):
    """Structurally valid input that fails a mathematical precondition."""


class BudgetError(RuntimeError):
    """An enumeration refused to run because it would exceed its budget."""
