"""Exception hierarchy shared by the library and the command line."""


class HyperpartError(Exception):
    """Base class for all errors raised by hyperpart."""


class UsageError(HyperpartError, ValueError):
    """Bad arguments: dimension mismatch, malformed pattern, out-of-range vertex."""


class ParseError(UsageError):
    """A text file does not conform to its format."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ApplicabilityError(HyperpartError):
    """An operation was called on an input outside its precondition."""


class ResourceError(HyperpartError):
    """An exhaustive method was asked to run beyond its configured cap."""
