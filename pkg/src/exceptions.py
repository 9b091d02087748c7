"""Exception types raised by grobfan and the CLI exit codes they map to."""

from typing import Optional


class GrobfanError(Exception):
    """Base class for all grobfan errors."""

    exit_code: int = 1


class InputSyntaxError(GrobfanError, ValueError):
    """Malformed input document, with the position of the offending token."""

    exit_code = 1

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None and column is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class TermOrderError(GrobfanError, ValueError):
    """A matrix or order spec that does not define a term order."""

    exit_code = 2


class SymmetryError(GrobfanError, ValueError):
    """Permutations that are malformed or do not fix the ideal."""

    exit_code = 3


class GroupTooLargeError(SymmetryError):
    """Group expansion exceeded the configured element cap."""


class IncoherentMarkingError(GrobfanError, RuntimeError):
    """Marked reduction did not terminate or a marking selects no open cone."""

    exit_code = 4
