"""Line-oriented text format for function and relation tables.

One document holds one table. The first line names shape and kind,
``table <n> <m> <function|relation>``. A function document continues with one
line of n space-separated digits, 0 for an unmarked column. A relation
document continues with one ``col <i>: <rows>`` line per column in order,
rows ascending and possibly empty. ``#`` starts a comment, blank lines are
skipped, and every parse error carries the line and column of the offending
token. Serialization is the exact inverse of parsing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal

from .enumeration import TableShape
from .errors import DomainError, ParseError
from .relations import RelationTable
from .tables import FunctionTable

__all__ = ["TableDocument", "parse_table_document", "serialize_table_document"]

_Token = tuple[str, int]
_Line = tuple[int, list[_Token]]


@dataclass(frozen=True)
class TableDocument:
    """A parsed table plus optional in-memory argument and value names."""

    table: FunctionTable | RelationTable
    arg_labels: dict[int, str] | None = None
    value_labels: dict[int, str] | None = None

    def __post_init__(self) -> None:
        shape = self.table.shape
        if self.arg_labels is not None:
            for key in self.arg_labels:
                if not isinstance(key, int) or not 1 <= key <= shape.n:
                    raise DomainError(f"argument label key {key!r} outside 1..{shape.n}")
        if self.value_labels is not None:
            for key in self.value_labels:
                if not isinstance(key, int) or not 1 <= key <= shape.m:
                    raise DomainError(f"value label key {key!r} outside 1..{shape.m}")

    @property
    def shape(self) -> TableShape:
        return self.table.shape

    @property
    def kind(self) -> Literal["function", "relation"]:
        return "function" if isinstance(self.table, FunctionTable) else "relation"


def _significant_lines(text: str) -> list[_Line]:
    """Token lists with 1-based columns, comments stripped, blank lines dropped."""
    lines: list[_Line] = []
    for number, raw in enumerate(text.split("\n"), start=1):
        body = raw.split("#", 1)[0]
        tokens = [(match.group(), match.start() + 1) for match in re.finditer(r"\S+", body)]
        if tokens:
            lines.append((number, tokens))
    return lines


def _parse_int(token: str, line: int, column: int, what: str) -> int:
    if not re.fullmatch(r"\d+", token):
        raise ParseError(f"{what} {token!r} is not a decimal integer", line=line, column=column)
    return int(token)


def _reject_extra_lines(lines: list[_Line], used: int) -> None:
    if len(lines) > used:
        line_number, tokens = lines[used]
        raise ParseError(
            "unexpected content after table", line=line_number, column=tokens[0][1]
        )


def _parse_header(lines: list[_Line]) -> tuple[TableShape, str]:
    if not lines:
        raise ParseError(
            "empty document, expected 'table <n> <m> <function|relation>'", line=1, column=1
        )
    line_number, tokens = lines[0]
    keyword, column = tokens[0]
    if keyword != "table":
        raise ParseError(f"expected 'table', got {keyword!r}", line=line_number, column=column)
    if len(tokens) < 4:
        raise ParseError(
            "expected '<n> <m> <function|relation>' after 'table'",
            line=line_number,
            column=column,
        )
    if len(tokens) > 4:
        extra, extra_column = tokens[4]
        raise ParseError(
            f"unexpected token {extra!r} after table kind", line=line_number, column=extra_column
        )
    n = _parse_int(tokens[1][0], line_number, tokens[1][1], "argument count")
    m = _parse_int(tokens[2][0], line_number, tokens[2][1], "value count")
    if n < 1:
        raise ParseError("argument count must be at least 1", line=line_number, column=tokens[1][1])
    if m < 1:
        raise ParseError("value count must be at least 1", line=line_number, column=tokens[2][1])
    kind, kind_column = tokens[3]
    if kind not in ("function", "relation"):
        raise ParseError(
            f"table kind must be 'function' or 'relation', got {kind!r}",
            line=line_number,
            column=kind_column,
        )
    return TableShape(n, m), kind


def _parse_function_body(lines: list[_Line], shape: TableShape) -> FunctionTable:
    header_line = lines[0][0]
    if len(lines) < 2:
        raise ParseError(
            f"expected a line of {shape.n} digits", line=header_line + 1, column=1
        )
    line_number, tokens = lines[1]
    if len(tokens) != shape.n:
        column = tokens[shape.n][1] if len(tokens) > shape.n else tokens[0][1]
        raise ParseError(
            f"expected {shape.n} digits, got {len(tokens)}", line=line_number, column=column
        )
    marks = []
    for token, column in tokens:
        digit = _parse_int(token, line_number, column, "digit")
        if digit > shape.m:
            raise ParseError(
                f"digit {digit} exceeds value count {shape.m}", line=line_number, column=column
            )
        marks.append(digit)
    _reject_extra_lines(lines, 2)
    return FunctionTable(shape, tuple(marks))


def _parse_relation_body(lines: list[_Line], shape: TableShape) -> RelationTable:
    columns: list[list[int]] = []
    for index in range(1, shape.n + 1):
        if len(lines) < index + 1:
            raise ParseError(
                f"expected 'col {index}:' line", line=lines[-1][0] + 1, column=1
            )
        line_number, tokens = lines[index]
        keyword, column = tokens[0]
        if keyword != "col":
            raise ParseError(f"expected 'col', got {keyword!r}", line=line_number, column=column)
        if len(tokens) < 2:
            raise ParseError(
                f"expected column index '{index}:' after 'col'", line=line_number, column=column
            )
        label, label_column = tokens[1]
        if label != f"{index}:":
            raise ParseError(
                f"expected '{index}:', got {label!r}", line=line_number, column=label_column
            )
        rows: list[int] = []
        for token, token_column in tokens[2:]:
            row = _parse_int(token, line_number, token_column, "row")
            if not 1 <= row <= shape.m:
                raise ParseError(
                    f"row {row} outside 1..{shape.m}", line=line_number, column=token_column
                )
            if rows and row <= rows[-1]:
                raise ParseError(
                    f"rows must be strictly ascending, got {row} after {rows[-1]}",
                    line=line_number,
                    column=token_column,
                )
            rows.append(row)
        columns.append(rows)
    _reject_extra_lines(lines, shape.n + 1)
    return RelationTable.from_rows(shape, columns)


def parse_table_document(text: str | bytes) -> TableDocument:
    """Parse one document; malformed input raises a positioned ParseError."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as error:
            raise ParseError(f"document is not UTF-8: {error}") from None
    lines = _significant_lines(text)
    shape, kind = _parse_header(lines)
    if kind == "function":
        return TableDocument(_parse_function_body(lines, shape))
    return TableDocument(_parse_relation_body(lines, shape))


def serialize_table_document(document: TableDocument) -> str:
    """Canonical text for a document; parsing it back yields an equal document."""
    table = document.table
    shape = table.shape
    lines = [f"table {shape.n} {shape.m} {document.kind}"]
    if isinstance(table, FunctionTable):
        lines.append(" ".join(str(mark) for mark in table.marks))
    else:
        for index, rows in enumerate(table.rows_by_column, start=1):
            suffix = " " + " ".join(str(row) for row in rows) if rows else ""
            lines.append(f"col {index}:{suffix}")
    return "\n".join(lines) + "\n"
