"""Exception types shared across the package."""


class CoxlenError(Exception):
    """Base class for all package-specific errors."""


class ParseError(CoxlenError, ValueError):
    """Malformed element, cycle-type or matrix text."""


class RankMismatchError(CoxlenError, ValueError):
    """Operands live in groups of different rank."""


class ResourceBudgetError(CoxlenError, RuntimeError):
    """An enumeration would exceed the configured resource ceiling.

    Raised instead of silently truncating: every reported count is exact.
    """


class NotInSubgroupError(CoxlenError, ValueError):
    """An element was required to lie in the even-sign-change subgroup."""
