"""Exceptions raised by the domain layer."""


class SchwarzError(Exception):
    """Base class for every failure the toolkit reports."""


class ZeroDivisionRatFuncError(SchwarzError, ZeroDivisionError):
    """Division by the zero rational function."""


class PoleError(SchwarzError):
    """A point or a composition lands on a pole."""


class ConstantFunctionError(SchwarzError):
    """An operation needing a non-constant function got a constant."""


class GenericParamsError(SchwarzError):
    """Exact parameter values were required but the Generic tag was given."""


class IrrationalParameterError(SchwarzError):
    """An exact but irrational parameter cannot be classified."""


class OrderTooSmallError(SchwarzError):
    """Truncation order below the minimum an operation needs."""


class DegenerateSeriesError(SchwarzError):
    """A series has vanishing first derivative where it must not."""


class NonHyperbolicError(SchwarzError):
    """A signature-level query needs a hyperbolic signature."""


class ContinuationError(SchwarzError):
    """Analytic continuation along a path failed."""


class InconclusiveError(SchwarzError):
    """The projective-group classification could not be certified."""


class ParseError(SchwarzError, ValueError):
    """User input could not be parsed."""

    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = "{} (at position {} of {!r})".format(message, position, text)
        super().__init__(message)
