"""Exception hierarchy shared by the library and the CLI."""


class LinappsError(Exception):
    """Base class for every error raised by this package."""


class ParseError(LinappsError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ShapeError(LinappsError, ValueError):
    pass


class InvalidOperationError(LinappsError, ValueError):
    pass


class NotAnEigenvalueError(LinappsError, ValueError):
    pass


class DomainError(LinappsError, ValueError):
    pass


class InfeasibleError(LinappsError):
    """No nonnegative eigenvector exists among the exact eigenvalues."""


class ExactnessUnavailableError(LinappsError):
    """The answer would require an irrational eigenvalue."""
