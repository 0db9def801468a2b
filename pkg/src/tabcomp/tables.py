"""Extensional function tables and their inspection-based evaluation.

A function table marks at most one cell per argument column; evaluation reads
the marked row of a column, inversion reads the marked columns of a row.
Storage is one small integer per column (0 = unmarked); the n×m grid is a
view, not the representation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import FunctionIndex, TableShape
from .errors import DomainError, InvalidIndexError

__all__ = ["FunctionTable", "encode", "decode", "evaluate", "inverse_evaluate"]


@dataclass(frozen=True)
class FunctionTable:
    """A possibly partial finite discrete function of shape (n, m).

    ``marks[i]`` is the marked row (1..m) of column i+1, or 0 when column i+1
    has no marked cell.
    """

    shape: TableShape
    marks: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "marks", tuple(self.marks))
        if len(self.marks) != self.shape.n:
            raise InvalidIndexError(
                f"expected {self.shape.n} columns for shape {self.shape}, got {len(self.marks)}"
            )
        for column, row in enumerate(self.marks, start=1):
            if not isinstance(row, int) or not 0 <= row <= self.shape.m:
                raise InvalidIndexError(
                    f"mark {row!r} in column {column} outside rows 0..{self.shape.m}"
                )

    @property
    def is_total(self) -> bool:
        return all(row != 0 for row in self.marks)


def encode(table: FunctionTable) -> FunctionIndex:
    """Index of a function table: digit i is the marked row of column i, or 0."""
    return FunctionIndex(table.shape, table.marks)


def decode(index: FunctionIndex) -> FunctionTable:
    """Table of a function index; inverse of encode."""
    return FunctionTable(index.shape, index.digits)


def evaluate(table: FunctionTable, argument: int) -> int | None:
    """Value at an argument: the marked row of its column, or None when unmarked.

    Inspects exactly one column.
    """
    if not isinstance(argument, int) or not 1 <= argument <= table.shape.n:
        raise DomainError(f"argument {argument!r} outside columns 1..{table.shape.n}")
    row = table.marks[argument - 1]
    return row if row != 0 else None


def inverse_evaluate(table: FunctionTable, value: int) -> tuple[int, ...]:
    """All arguments mapping to a value: the marked columns of its row, ascending.

    Inspects each column of the row once; the preimage may be empty or contain
    several columns.
    """
    if not isinstance(value, int) or not 1 <= value <= table.shape.m:
        raise DomainError(f"value {value!r} outside rows 1..{table.shape.m}")
    return tuple(
        column for column, row in enumerate(table.marks, start=1) if row == value
    )
