"""
Error Types
Exceptions raised by the group determinant library
"""


class GroupDetError(Exception):
    """Base class for all library errors"""


class GroupError(GroupDetError, ValueError):
    """Invalid group data: bad orders, non-subgroups, bad transversals or spec strings"""


class RingMismatchError(GroupDetError, TypeError):
    """Operands live in different cyclotomic rings"""


class IntegralityError(GroupDetError, ArithmeticError):
    """A value that must be a rational integer is not"""


class VerificationError(GroupDetError, AssertionError):
    """An internal cross-check failed"""


class ExpansionLimitError(GroupDetError):
    """A symbolic expansion would exceed the configured size cap"""


class MissingVariableError(GroupDetError, KeyError):
    """An assignment does not cover every variable of a polynomial"""


class FactorizationLimitError(GroupDetError):
    """An integer is beyond the configured factorization bound"""


class HypothesisError(GroupDetError, ValueError):
    """A prime does not satisfy the residue hypothesis of a witness family"""


class RepresentationNotFoundError(GroupDetError):
    """A bounded parameter search found nothing"""


class SearchCapError(GroupDetError):
    """A search box exceeds the configured volume cap"""


class UsageError(GroupDetError, ValueError):
    """Invalid command-line input"""
