"""Exception hierarchy shared by the library and the CLI."""


class LinfieldError(Exception):
    """Base class for every error raised by linfield."""


class ZeroDenominatorError(LinfieldError, ZeroDivisionError):
    pass


class ZeroInverseError(LinfieldError, ZeroDivisionError):
    pass


class UndefinedCompositionError(LinfieldError):
    """Substituting into a rational function made its denominator vanish."""


class PoleError(LinfieldError, ZeroDivisionError):
    """A denominator vanishes at the requested evaluation point."""


class VariableCountError(LinfieldError, ValueError):
    """Operands live in rings with different numbers of variables."""


class DependentInputError(LinfieldError):
    pass


class ZeroEtaError(LinfieldError, ZeroDivisionError):
    pass


class PreconditionError(LinfieldError):
    pass


class ParseError(LinfieldError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class UnknownVariableError(ParseError):
    pass


class NonIntegerExponentError(ParseError):
    pass
