"""Exception hierarchy shared by all modules.

The three leaf classes map onto the CLI exit codes: DomainError -> 1,
BudgetError -> 2, ConsistencyError -> 3.
"""


class RankGeoError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(RankGeoError):
    """Invalid input or violated precondition (bad field spec, degenerate
    code where a nondegenerate one is required, dimension mismatch, ...)."""


class BudgetError(RankGeoError):
    """An enumeration would exceed the configured budget.  Raised up front,
    never after a silent truncation."""


class ConsistencyError(RankGeoError):
    """Two independently evaluated sides of a proven equivalence returned
    different truth values.  The loudest error the package can emit."""
