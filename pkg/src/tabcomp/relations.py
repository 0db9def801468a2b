"""Relation tables, computational entropy, superposition, and stochastic evaluation.

A relation table may mark any set of cells; column i carries v_i marks,
0 <= v_i <= m. A function table is exactly the v_i <= 1 special case. Marks
are stored as one fixed-width bit vector per column (bit j-1 set <=> the cell
at row j is marked), so superposition, containment, and row extraction reduce
to word-level boolean operations applied column-parallel.

Evaluating a relation at an argument picks one of that column's marked rows
uniformly at random; the per-argument indeterminacy is summarized by the
computational entropy e = (1/n) * sum(log2(v_i)) over non-empty columns, which
is 0 exactly for (partial) functions and at most log2(m).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal, Sequence

from .enumeration import TableShape
from .errors import DomainError, ShapeError
from .streams import substream_seed, uniform_index
from .tables import FunctionTable

__all__ = [
    "RelationTable",
    "entropy",
    "random_evaluate",
    "sample_function",
    "superpose",
    "contains",
    "count_contained",
    "inverse_evaluate_relation",
]

CountMode = Literal["total-on-support", "including-partial"]


@dataclass(frozen=True)
class RelationTable:
    """An n×m grid of boolean marks, one bit vector per argument column."""

    shape: TableShape
    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "columns", tuple(self.columns))
        if len(self.columns) != self.shape.n:
            raise ShapeError(
                f"expected {self.shape.n} columns for shape {self.shape}, got {len(self.columns)}"
            )
        full = (1 << self.shape.m) - 1
        for column, bits in enumerate(self.columns, start=1):
            if not isinstance(bits, int) or not 0 <= bits <= full:
                raise ShapeError(
                    f"column {column} mark bits {bits!r} outside rows 1..{self.shape.m}"
                )

    @classmethod
    def empty(cls, shape: TableShape) -> RelationTable:
        return cls(shape, (0,) * shape.n)

    @classmethod
    def from_rows(cls, shape: TableShape, rows_per_column: Iterable[Iterable[int]]) -> RelationTable:
        """Build from explicit row lists, one iterable of rows (1..m) per column."""
        columns = []
        for column, rows in enumerate(rows_per_column, start=1):
            bits = 0
            for row in rows:
                if not isinstance(row, int) or not 1 <= row <= shape.m:
                    raise ShapeError(f"row {row!r} in column {column} outside 1..{shape.m}")
                bits |= 1 << (row - 1)
            columns.append(bits)
        return cls(shape, tuple(columns))

    @classmethod
    def from_function(cls, table: FunctionTable) -> RelationTable:
        """View a function table as a relation (v_i <= 1 everywhere)."""
        return cls(table.shape, tuple(0 if row == 0 else 1 << (row - 1) for row in table.marks))

    @cached_property
    def mark_counts(self) -> tuple[int, ...]:
        """Per-column mark counts v_1..v_n."""
        return tuple(bits.bit_count() for bits in self.columns)

    @cached_property
    def rows_by_column(self) -> tuple[tuple[int, ...], ...]:
        """Marked rows of each column, ascending."""
        result = []
        for bits in self.columns:
            rows = []
            while bits:
                low = bits & -bits
                rows.append(low.bit_length())
                bits ^= low
            result.append(tuple(rows))
        return tuple(result)

    @property
    def is_function(self) -> bool:
        return all(count <= 1 for count in self.mark_counts)

    def to_function(self) -> FunctionTable:
        """The function this relation is, when every column has at most one mark."""
        if not self.is_function:
            raise ShapeError("relation has a column with more than one mark")
        return FunctionTable(self.shape, tuple(bits.bit_length() for bits in self.columns))


def _as_relation(table: RelationTable | FunctionTable) -> RelationTable:
    if isinstance(table, FunctionTable):
        return RelationTable.from_function(table)
    return table


def entropy(relation: RelationTable | FunctionTable) -> float:
    """Computational entropy in bits per argument: (1/n) * sum(log2(v_i)).

    Columns with no marks contribute 0, so functions and partial functions
    have entropy exactly 0; the maximum is log2(m) when every cell is marked.
    """
    relation = _as_relation(relation)
    terms = [math.log2(count) for count in relation.mark_counts if count >= 1]
    return math.fsum(terms) / relation.shape.n


def random_evaluate(
    relation: RelationTable | FunctionTable, argument: int, randomness: random.Random
) -> int | None:
    """One marked row of the argument's column, chosen uniformly; None when empty."""
    relation = _as_relation(relation)
    if not isinstance(argument, int) or not 1 <= argument <= relation.shape.n:
        raise DomainError(f"argument {argument!r} outside columns 1..{relation.shape.n}")
    rows = relation.rows_by_column[argument - 1]
    if not rows:
        return None
    return rows[randomness.randrange(len(rows))]


def sample_function(
    relation: RelationTable | FunctionTable, randomness: random.Random
) -> FunctionTable:
    """Draw one function contained in the relation, each column independently uniform.

    Consumes a single 64-bit value from ``randomness`` and derives one
    substream per column, so the outcome is independent of column evaluation
    order; per-column choices use masked rejection and are exactly uniform.
    """
    relation = _as_relation(relation)
    base = randomness.getrandbits(64)
    marks = []
    for index, rows in enumerate(relation.rows_by_column):
        if not rows:
            marks.append(0)
        else:
            marks.append(rows[uniform_index(substream_seed(base, index), len(rows))])
    return FunctionTable(relation.shape, tuple(marks))


def superpose(
    base: RelationTable | FunctionTable, addition: RelationTable | FunctionTable
) -> RelationTable:
    """Cell-wise union of two tables of one shape; commutative, associative, idempotent."""
    base = _as_relation(base)
    addition = _as_relation(addition)
    if base.shape != addition.shape:
        raise ShapeError(f"shape mismatch: {base.shape} vs {addition.shape}")
    return RelationTable(
        base.shape, tuple(a | b for a, b in zip(base.columns, addition.columns))
    )


def contains(relation: RelationTable | FunctionTable, function: FunctionTable) -> bool:
    """True iff every marked cell of the function is marked in the relation."""
    relation = _as_relation(relation)
    if relation.shape != function.shape:
        raise ShapeError(f"shape mismatch: {relation.shape} vs {function.shape}")
    for bits, row in zip(relation.columns, function.marks):
        if row != 0 and not bits >> (row - 1) & 1:
            return False
    return True


def count_contained(
    relation: RelationTable | FunctionTable, mode: CountMode = "total-on-support"
) -> int:
    """Number of functions contained in the relation.

    total-on-support: one choice per non-empty column, empty columns forced
    undefined, giving the product of the non-zero v_i. including-partial:
    every column may also stay undefined, giving the product of (v_i + 1),
    which counts every contained function down to the empty one.
    """
    relation = _as_relation(relation)
    if mode == "total-on-support":
        return math.prod(count for count in relation.mark_counts if count >= 1)
    if mode == "including-partial":
        return math.prod(count + 1 for count in relation.mark_counts)
    raise DomainError(f"unknown counting mode {mode!r}")


def inverse_evaluate_relation(
    relation: RelationTable | FunctionTable, value: int
) -> tuple[int, ...]:
    """All columns whose cell at the given row is marked, ascending."""
    relation = _as_relation(relation)
    if not isinstance(value, int) or not 1 <= value <= relation.shape.m:
        raise DomainError(f"value {value!r} outside rows 1..{relation.shape.m}")
    bit = 1 << (value - 1)
    return tuple(
        column for column, bits in enumerate(relation.columns, start=1) if bits & bit
    )
