"""Exceptions shared across the package."""


class TangleError(Exception):
    """Base class for all package errors."""


class ValidationFailure(TangleError):
    """A diagram failed validation where a valid one was required."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"invalid diagram: {report.summary()}")


class NotOutermost(TangleError):
    """Segment classification requested at an inner crossing."""


class EmptyResult(TangleError):
    """An operation would delete every component."""


class InapplicableMove(TangleError):
    """A move was applied at a site where it is not available."""


class BadParameter(TangleError):
    """A builder or bound was called with out-of-range parameters."""


class NonPlanarPattern(TangleError):
    """A closure pattern is not realizable outside the disk."""


class CapExceeded(TangleError):
    """A state-sum size cap was exceeded."""


class OracleMismatch(TangleError):
    """Enumeration count disagrees with the independent oracle."""


class TpdSyntaxError(TangleError):
    """A TPD document failed to parse."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")
