"""Exception types shared across the package."""


class JohnsonLabError(Exception):
    """Base class for all library errors."""


class InvalidGenerator(JohnsonLabError, ValueError):
    pass


class Incompatible(JohnsonLabError, ValueError):
    pass


class NotAUnit(JohnsonLabError, ValueError):
    pass


class OutOfRange(JohnsonLabError, ValueError):
    pass


class BudgetExceeded(JohnsonLabError, RuntimeError):
    pass


class NotInLevel2(JohnsonLabError, ValueError):
    pass


class NotInFiltration(JohnsonLabError, ValueError):
    pass


class InvariantViolation(JohnsonLabError, RuntimeError):
    pass


class NotLevelP(JohnsonLabError, ValueError):
    pass


class NotQHSAtP(JohnsonLabError, ValueError):
    """The H-block of the inverse gluing matrix is singular mod p."""


class ParseError(JohnsonLabError, ValueError):
    pass
