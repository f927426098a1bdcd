"""Exception hierarchy shared by the library and the command line front end."""


class QCramerError(Exception):
    """Base class for all library errors."""


class ZeroDivisorError(QCramerError, ZeroDivisionError):
    pass


class DimensionError(QCramerError, ValueError):
    pass


class NotSquareError(DimensionError):
    pass


class NotHermitianError(QCramerError, ValueError):
    pass


class SingularMatrixError(QCramerError, ValueError):
    pass


class SizeCapError(QCramerError):
    """Raised instead of enumerating n! permutations for n above the cap."""


class RouteError(QCramerError, ValueError):
    """A representation route was requested that does not apply to the data."""


class DeterminantEngineError(QCramerError, ArithmeticError):
    """An internal identity of the determinant calculus failed (a bug, not bad input)."""


class ParseError(QCramerError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if column is not None:
            loc.append(f"column {column}")
        super().__init__(f"{', '.join(loc)}: {message}" if loc else message)


class InconsistentEquationError(QCramerError):
    """The right-hand side is outside the space the restricted equation requires.

    ``report`` carries the best-effort solution and its nonzero residual.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
