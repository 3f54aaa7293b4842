"""Exception types shared across the package."""

from __future__ import annotations


class SelforthError(ValueError):
    """Base class for invalid-input errors raised by this package."""


class NotPrime(SelforthError):
    pass


class ReducibleModulus(SelforthError):
    pass


class DegreeZero(SelforthError):
    pass


class TowerMismatch(SelforthError):
    pass


class WrongCount(SelforthError):
    pass


class NotABasis(SelforthError):
    pass


class TooLarge(SelforthError):
    """A brute-force size guard was exceeded."""


class BadRange(SelforthError):
    pass


class NotCoprime(SelforthError):
    pass


class EmptyCode(SelforthError):
    pass


class LengthMismatch(SelforthError):
    pass


class BadSet(SelforthError):
    pass


class ConditionNotMet(SelforthError):
    pass


class ParseError(SelforthError):
    pass


class FieldDivisionByZero(SelforthError, ZeroDivisionError):
    pass
