"""Global enumeration of finite discrete functions over a diagonal order of shapes.

A finite discrete function maps n positional arguments to at most one of m
positional values. Each such function is identified within its n×m table by a
digit string k = k_1...k_n in base m+1: k_i = j records that argument i maps
to value j, and k_i = 0 records that the function is undefined at argument i.
A table of shape (n, m) therefore holds exactly (m+1)^n total and partial
functions, from the empty function (all zeros) to the maximal one (all m's).

Table shapes are arranged along diagonals of constant n + m - 1: diagonal j
holds the j shapes (j,1), (j-1,2), ..., (1,j), numbered consecutively across
diagonals, so shape-to-number and number-to-shape are exact inverses
(``table_number`` / ``table_shape``). Prepending the function counts of all
earlier tables to a function's within-table position yields a gapless 1-based
numbering of every finite discrete function across all shapes
(``function_number`` / ``function_from_number``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ArityError, DomainError, InvalidIndexError, ShapeError

__all__ = [
    "TableShape",
    "FunctionIndex",
    "max_fn",
    "diagonal_of_table",
    "table_shape",
    "table_number",
    "count_functions",
    "function_number",
    "function_from_number",
    "successor",
    "anti_diagonal",
]


@dataclass(frozen=True)
class TableShape:
    """An n×m table shape: n argument columns by m value rows, both >= 1."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise ShapeError(f"argument count n must be a positive integer, got {self.n!r}")
        if not isinstance(self.m, int) or self.m < 1:
            raise ShapeError(f"value count m must be a positive integer, got {self.m!r}")

    @property
    def diagonal(self) -> int:
        """Index of the diagonal this shape lies on (n + m - 1)."""
        return self.n + self.m - 1

    def __str__(self) -> str:
        return f"{self.n}x{self.m}"


@dataclass(frozen=True)
class FunctionIndex:
    """The digit string identifying one finite discrete function in its table.

    ``digits[i]`` is the base-(m+1) digit for argument position i+1; digit 0
    marks an argument with no value. The first digit is the most significant
    when the string is read as a number.
    """

    shape: TableShape
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "digits", tuple(self.digits))
        if len(self.digits) != self.shape.n:
            raise InvalidIndexError(
                f"expected {self.shape.n} digits for shape {self.shape}, got {len(self.digits)}"
            )
        for position, digit in enumerate(self.digits, start=1):
            if not isinstance(digit, int) or not 0 <= digit <= self.shape.m:
                raise InvalidIndexError(
                    f"digit {digit!r} at position {position} outside 0..{self.shape.m}"
                )

    def as_natural(self) -> int:
        """The digit string read as a natural number in base m+1."""
        value = 0
        for digit in self.digits:
            value = value * (self.shape.m + 1) + digit
        return value


def max_fn(j: int) -> int:
    """Number of the largest table in diagonal j.

    Equals the j-th triangular number j(j+1)/2, the closed form of the
    recursion max(0) = 0, max(j) = max(j-1) + j.
    """
    if not isinstance(j, int) or j < 0:
        raise DomainError(f"diagonal index must be a non-negative integer, got {j!r}")
    return j * (j + 1) // 2


def diagonal_of_table(i: int) -> int:
    """The diagonal j on which table i lies: the unique j with max_fn(j-1) < i <= max_fn(j)."""
    if not isinstance(i, int) or i < 1:
        raise DomainError(f"table number must be a positive integer, got {i!r}")
    # Invert the triangular closed form, then correct by at most one step.
    j = (math.isqrt(8 * i + 1) - 1) // 2
    while max_fn(j) < i:
        j += 1
    while j > 1 and max_fn(j - 1) >= i:
        j -= 1
    return j


def table_shape(i: int) -> TableShape:
    """Shape (n, m) of the i-th table in the diagonal order; inverse of table_number."""
    j = diagonal_of_table(i)
    m = i - max_fn(j - 1)
    n = j - m + 1
    return TableShape(n, m)


def table_number(shape: TableShape) -> int:
    """Position of a shape in the diagonal order; inverse of table_shape."""
    return max_fn(shape.diagonal - 1) + shape.m


def count_functions(shape: TableShape) -> int:
    """Number of total and partial functions in an n×m table: (m+1)^n.

    Counts the empty function (all digits 0) through the maximal one (all m).
    """
    return (shape.m + 1) ** shape.n


def _offset_before(table: int) -> int:
    """Total number of functions in tables 1..table-1 of the diagonal order."""
    return sum(count_functions(table_shape(i)) for i in range(1, table))


def function_number(index: FunctionIndex) -> int:
    """Absolute 1-based position of a function in the global enumeration.

    The functions of all earlier tables in the diagonal order come first;
    within its own table the function sits at its digit string read as a
    base-(m+1) natural, plus one.
    """
    return _offset_before(table_number(index.shape)) + index.as_natural() + 1


def function_from_number(number: int) -> FunctionIndex:
    """Inverse of function_number: recover (shape, digits) from a global position.

    Walks the diagonal order accumulating per-table function counts until the
    table containing ``number`` is found, then expands the residual position
    in base m+1, left-padded with zeros to n digits.
    """
    if not isinstance(number, int) or number < 1:
        raise DomainError(f"global function number must be a positive integer, got {number!r}")
    remaining = number - 1
    table = 1
    while True:
        shape = table_shape(table)
        count = count_functions(shape)
        if remaining < count:
            break
        remaining -= count
        table += 1
    base = shape.m + 1
    digits = [0] * shape.n
    for position in reversed(range(shape.n)):
        remaining, digits[position] = divmod(remaining, base)
    return FunctionIndex(shape, tuple(digits))


def successor(index: FunctionIndex) -> FunctionIndex | None:
    """Next index in base-(m+1) counting order within the same shape.

    Returns None once the maximal index m_1...m_n is reached (end of table).
    """
    digits = list(index.digits)
    for position in reversed(range(len(digits))):
        if digits[position] < index.shape.m:
            digits[position] += 1
            return FunctionIndex(index.shape, tuple(digits))
        digits[position] = 0
    return None


def anti_diagonal(functions: Sequence[FunctionIndex] | Iterable[FunctionIndex]) -> FunctionIndex:
    """Build a function of shape (n, m) absent from a list of n such functions.

    The result g differs from the i-th input at argument i: digit_i(g) is the
    smallest value in 0..m different from digit_i of the i-th function, so g
    cannot equal any input. Requires exactly n inputs, all of one shape (n, m).
    """
    functions = list(functions)
    if not functions:
        raise ArityError("anti-diagonal construction needs at least one function")
    shape = functions[0].shape
    for fn in functions:
        if fn.shape != shape:
            raise ShapeError(f"all functions must share shape {shape}, got {fn.shape}")
    if len(functions) != shape.n:
        raise ArityError(
            f"shape {shape} needs exactly {shape.n} functions, got {len(functions)}"
        )
    digits = tuple(1 if fn.digits[i] == 0 else 0 for i, fn in enumerate(functions))
    return FunctionIndex(shape, digits)
