"""Exception hierarchy shared by all modules."""


class QutritEntError(Exception):
    """Base class for every error raised by this package."""


class DimensionMismatch(QutritEntError, ValueError):
    pass


class NoConvergence(QutritEntError, ArithmeticError):
    pass


class NotReal(QutritEntError, ValueError):
    pass


class NoSplit(QutritEntError, ValueError):
    pass


class DeviationError(QutritEntError, ValueError):
    """A state property was violated; ``deviation`` holds the measured size."""

    prop = "property"

    def __init__(self, deviation, message=None):
        self.deviation = float(deviation)
        super().__init__(message or f"{self.prop} violated (deviation {self.deviation:.3e})")


class NotHermitian(DeviationError):
    prop = "hermiticity"


class TraceNotOne(DeviationError):
    prop = "unit trace"


class NotPSD(DeviationError):
    prop = "positivity"


class DomainError(QutritEntError, ValueError):
    pass


class NegativeRadicand(DomainError):
    pass


class EmptyGrid(DomainError):
    pass


class SingletDominant(QutritEntError, ValueError):
    pass


class MatrixFileError(QutritEntError, ValueError):
    """Parse failure; ``line`` and ``column`` are 1-based (column may be None)."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class BadHeader(MatrixFileError):
    pass


class BadEntryCount(MatrixFileError):
    pass


class BadNumber(MatrixFileError):
    pass
