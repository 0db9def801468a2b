"""Exception types shared across the package.

All validation failures are ValueError subclasses so callers can catch
broadly; the CLI distinguishes ParseError (malformed input, exit 2) from
the rest (domain/validation errors, exit 1).
"""

from __future__ import annotations


class ShapeError(ValueError):
    """Table shape is invalid, or two operands have mismatched shapes."""


class DomainError(ValueError):
    """A positional argument, value, or number lies outside its range."""


class InvalidIndexError(ValueError):
    """A function index digit string violates its shape (digit > m, wrong length)."""


class ArityError(ValueError):
    """An anti-diagonal input list does not contain exactly n functions."""


class ConfigError(ValueError):
    """An experiment configuration is inconsistent or unsatisfiable."""


class ParseError(ValueError):
    """Malformed document or flag text. Carries a 1-based position when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" if column is None else f"line {line}, column {column}"
            message = f"{where}: {message}"
        super().__init__(message)
