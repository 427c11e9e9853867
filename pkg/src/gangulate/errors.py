"""Exception hierarchy shared by every module of the package."""


class GangulateError(Exception):
    """Base class for all errors raised by gangulate."""


class OutOfRange(GangulateError, ValueError):
    pass


class ParseError(GangulateError, ValueError):
    """Malformed instance or graph text. ``line`` is 1-based."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class VertexOutOfRange(ParseError, OutOfRange):
    """A vertex index in the input falls outside 0..n-1."""


class InadmissibleParams(GangulateError, ValueError):
    """n is not of the form g + t(g-2)."""


class PreconditionError(GangulateError, ValueError):
    pass


class BoundaryEdgeError(PreconditionError):
    pass


class NoneFound(GangulateError):
    pass


class NotPotentiallyAngulable(GangulateError):
    pass


class SizeCapExceeded(GangulateError):
    pass


class PlacementValidationError(GangulateError):
    """A constructed witness failed validation; carries the reasons."""

    def __init__(self, message, reasons=()):
        self.reasons = list(reasons)
        super().__init__(message + (": " + "; ".join(self.reasons) if self.reasons else ""))
