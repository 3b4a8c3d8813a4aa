"""Exception types shared across the package."""


class MvdecompError(Exception):
    """Base class for all package-specific errors."""


class DimensionMismatchError(MvdecompError, ValueError):
    """Exponent vectors or ideals of incompatible ring dimension."""


class DomainError(MvdecompError, ValueError):
    """Input outside an operation's domain (zero/unit ideal, non-artinian, ...)."""


class ScaleError(MvdecompError, ValueError):
    """A guard against infeasibly large computations tripped."""


class FeasibilityError(MvdecompError, ValueError):
    """A random-ideal specification cannot be satisfied."""


class IdealSyntaxError(MvdecompError, ValueError):
    """Malformed ideal file; carries 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
