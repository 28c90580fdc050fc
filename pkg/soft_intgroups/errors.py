"""
Exception hierarchy shared by all modules.
"""

from typing import Any, Optional, Sequence


class SoftGroupError(Exception):
    """Base class for every error raised by the package."""


class AxiomViolation(SoftGroupError):
    """A Cayley table breaks a group axiom."""

    def __init__(self, axiom: str, witness: Sequence[int]):
        self.axiom = axiom
        self.witness = tuple(int(i) for i in witness)
        super().__init__(f"{axiom} fails at {self.witness}")


class NotASubgroup(SoftGroupError):
    """An element set is not closed, lacks the identity or lacks inverses."""


class NotNormal(SoftGroupError):
    """A subgroup or soft int-group is required to be normal."""


class NotAHomomorphism(SoftGroupError):
    """An element map does not preserve products."""

    def __init__(self, x: int, y: int):
        self.pair = (x, y)
        super().__init__(f"map(x*y) != map(x)*map(y) at {self.pair}")


class BoundExceeded(SoftGroupError):
    """A group is larger than the configured enumeration bound."""


class BudgetExceeded(SoftGroupError):
    """An enumeration would exceed the configured budget."""

    def __init__(self, required: int, budget: int):
        self.required = required
        self.budget = budget
        super().__init__(f"enumeration needs {required} items, budget is {budget}")


class GroupMismatch(SoftGroupError):
    """Soft sets live over different groups."""


class UniverseMismatch(SoftGroupError):
    """Soft sets or values live over different universes."""


class EmptySupport(SoftGroupError):
    """An operation needs a soft set with nonempty support."""


class EmptyFamily(SoftGroupError):
    """A family operation received no members."""


class PreconditionFailed(SoftGroupError):
    """An operation's hypothesis does not hold for its input."""


class NotAnIntGroup(SoftGroupError):
    """A soft set fails the soft int-group conditions."""

    def __init__(self, violation: Any):
        self.violation = violation
        super().__init__(f"not a soft int-group: {violation}")


class UnknownTheorem(SoftGroupError):
    """No checker is registered under the requested id."""


class ParseError(SoftGroupError):
    """A group, soft set or argument could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(f"{where}{message}")
