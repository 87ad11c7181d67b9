"""Exceptions raised by idealpow.

Mathematical failures derive from AlgebraError (the CLI maps them to exit
code 1), malformed input derives from ParseError (exit code 2).
"""


class IdealPowError(Exception):
    pass


class AlgebraError(IdealPowError):
    pass


class ParseError(IdealPowError):
    pass


class MixedFields(AlgebraError):
    pass


class DivisionByZero(AlgebraError):
    pass


class LengthMismatch(AlgebraError):
    pass


class MixedRings(AlgebraError):
    pass


class MissingImage(AlgebraError):
    pass


class ZeroPolynomial(AlgebraError):
    pass


class ZeroIdeal(AlgebraError):
    pass


class ZeroDivisor(AlgebraError):
    pass


class BadVariableSet(AlgebraError):
    pass


class UnitIdeal(AlgebraError):
    pass


class NotMPrimary(AlgebraError):
    pass


class NotContained(AlgebraError):
    pass


class NotHomogeneous(AlgebraError):
    pass


class NotAtOrigin(AlgebraError):
    pass


class ExponentOverflow(AlgebraError):
    pass


class InfiniteLength(AlgebraError):
    def __init__(self, k: int):
        super().__init__(f"quotient has infinite length at k={k}")
        self.k = k


class ExpressionSyntaxError(ParseError):
    def __init__(self, message: str, position: int, line: int = None):
        where = f"position {position}" if line is None else f"line {line}, position {position}"
        super().__init__(f"{message} ({where})")
        self.position = position
        self.line = line


class NonPrimeCharacteristic(ParseError):
    pass


class ReservedVariableName(ParseError):
    pass


class UnknownVariable(ParseError):
    pass


class UnknownIdeal(ParseError):
    pass
