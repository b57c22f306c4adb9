"""Exception hierarchy shared by every module of the package."""


class SqrtEulerError(Exception):
    """Base class for all errors raised by this package."""


class InvalidRatFunc(SqrtEulerError):
    pass


class UnsupportedRank(SqrtEulerError):
    pass


class NotUnitSeries(SqrtEulerError):
    pass


class NotUnipotent(SqrtEulerError):
    pass


class ShapeError(SqrtEulerError):
    pass


class NotIsotropic(SqrtEulerError):
    pass


class NotMaximalIsotropic(SqrtEulerError):
    pass


class NormalFormObstruction(SqrtEulerError):
    """An isotropic vector or unit vector does not exist over Q(i)."""


class InvalidOrientation(SqrtEulerError):
    pass


class InternalConventionError(SqrtEulerError):
    """A sign computation produced something other than +1 or -1.

    This can only happen through a bug in the sign conventions.
    """


class OddRankUnsupported(SqrtEulerError):
    pass


class SizeLimit(SqrtEulerError):
    pass


class ValidationError(SqrtEulerError):
    """Invalid input data; ``code`` names the first problem found."""

    def __init__(self, code, message=""):
        super().__init__(f"{code}: {message}" if message else code)
        self.code = code
        self.message = message


class ParseError(SqrtEulerError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


class SchemaError(SqrtEulerError):
    """Input that does not match the documented JSON layout."""
