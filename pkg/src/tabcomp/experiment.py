"""Entropy trade-off sweep: store function sets in one relation, measure recall.

Each sweep point superposes the first S functions of a master sequence into a
single relation table and records the relation's computational entropy, how
many total functions it contains, and the precision of stochastic retrieval:
the probability that one uniformly sampled contained function is one of the S
stored ones, both in closed form and as an observed frequency over repeated
trials.

All randomness is derived from the one seed in the config: the master
sequence from one substream, each point's trials from a substream keyed by
point position. Points therefore never share generator state and the report
is byte-identical however many workers compute it.
"""

from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce
from typing import Literal

from .enumeration import TableShape
from .errors import ConfigError, ParseError
from .relations import RelationTable, count_contained, entropy, sample_function, superpose
from .streams import substream_seed
from .tables import FunctionTable

__all__ = [
    "ExperimentConfig",
    "SweepPoint",
    "ExperimentReport",
    "run_sweep",
    "emit_report",
    "parse_report",
]

ReportFormat = Literal["csv", "json"]

_CSV_HEADER = ("S", "entropy", "contained_total", "precision_expected", "precision_observed")


@dataclass(frozen=True)
class ExperimentConfig:
    """One sweep: which shape, which stored-set sizes, how many trials per point."""

    shape: TableShape
    stored_counts: tuple[int, ...]
    trials: int
    seed: int
    distinct: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "stored_counts", tuple(self.stored_counts))
        if not self.stored_counts:
            raise ConfigError("stored_counts must name at least one sweep point")
        for count in self.stored_counts:
            if not isinstance(count, int) or count < 1:
                raise ConfigError(f"stored count {count!r} is not a positive integer")
        if not isinstance(self.trials, int) or self.trials < 1:
            raise ConfigError(f"trials {self.trials!r} is not a positive integer")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 1 << 64:
            raise ConfigError(f"seed {self.seed!r} outside 0..2**64-1")
        if self.distinct:
            total = self.shape.m**self.shape.n
            if max(self.stored_counts) > total:
                raise ConfigError(
                    f"cannot store {max(self.stored_counts)} distinct total functions "
                    f"in shape {self.shape}; only {total} exist"
                )


@dataclass(frozen=True)
class SweepPoint:
    stored_count: int
    entropy: float
    contained_total: int
    precision_expected: float
    precision_observed: float


@dataclass(frozen=True)
class ExperimentReport:
    points: tuple[SweepPoint, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))


def _master_sequence(config: ExperimentConfig) -> list[FunctionTable]:
    """The stored functions, drawn up-front; point S uses the first S of them.

    Total functions with digits uniform in 1..m; with distinct=True repeats
    are rejected so the prefix of length S is a set of size S.
    """
    randomness = random.Random(substream_seed(config.seed, 0))
    n, m = config.shape.n, config.shape.m
    needed = max(config.stored_counts)
    sequence: list[FunctionTable] = []
    seen: set[tuple[int, ...]] = set()
    while len(sequence) < needed:
        marks = tuple(randomness.randrange(1, m + 1) for _ in range(n))
        if config.distinct:
            if marks in seen:
                continue
            seen.add(marks)
        sequence.append(FunctionTable(config.shape, marks))
    return sequence


def _run_point(
    config: ExperimentConfig, master: list[FunctionTable], position: int
) -> SweepPoint:
    stored_count = config.stored_counts[position]
    stored = master[:stored_count]
    relation = reduce(superpose, stored, RelationTable.empty(config.shape))
    contained = count_contained(relation, "total-on-support")
    stored_marks = {table.marks for table in stored}
    # stored functions are total, so every column is non-empty and each
    # contained total function is sampled with probability 1/contained
    expected = len(stored_marks) / contained
    randomness = random.Random(substream_seed(config.seed, 1, position))
    hits = 0
    for _ in range(config.trials):
        if sample_function(relation, randomness).marks in stored_marks:
            hits += 1
    return SweepPoint(
        stored_count=stored_count,
        entropy=entropy(relation),
        contained_total=contained,
        precision_expected=expected,
        precision_observed=hits / config.trials,
    )


def run_sweep(config: ExperimentConfig, workers: int = 1) -> ExperimentReport:
    """Compute every sweep point; the worker count never changes the result."""
    if not isinstance(workers, int) or workers < 1:
        raise ConfigError(f"workers {workers!r} is not a positive integer")
    master = _master_sequence(config)
    positions = range(len(config.stored_counts))
    if workers == 1:
        points = [_run_point(config, master, position) for position in positions]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            points = list(pool.map(lambda p: _run_point(config, master, p), positions))
    return ExperimentReport(tuple(points))


def emit_report(report: ExperimentReport, format: ReportFormat = "csv") -> bytes:
    """Serialize a report; equal reports emit equal bytes."""
    if format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(_CSV_HEADER)
        for point in report.points:
            writer.writerow(
                [
                    point.stored_count,
                    repr(point.entropy),
                    point.contained_total,
                    repr(point.precision_expected),
                    repr(point.precision_observed),
                ]
            )
        return buffer.getvalue().encode("utf-8")
    if format == "json":
        payload = [
            {
                "stored_count": point.stored_count,
                "entropy": point.entropy,
                "contained_total": point.contained_total,
                "precision_expected": point.precision_expected,
                "precision_observed": point.precision_observed,
            }
            for point in report.points
        ]
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
    raise ConfigError(f"unknown report format {format!r}")


def parse_report(data: bytes, format: ReportFormat = "csv") -> ExperimentReport:
    """Inverse of emit_report for both formats."""
    text = data.decode("utf-8")
    if format == "csv":
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or tuple(rows[0]) != _CSV_HEADER:
            raise ParseError(f"expected header {','.join(_CSV_HEADER)}")
        points = []
        for row in rows[1:]:
            if len(row) != len(_CSV_HEADER):
                raise ParseError(f"expected {len(_CSV_HEADER)} fields, got {len(row)}")
            points.append(
                SweepPoint(
                    stored_count=int(row[0]),
                    entropy=float(row[1]),
                    contained_total=int(row[2]),
                    precision_expected=float(row[3]),
                    precision_observed=float(row[4]),
                )
            )
        return ExperimentReport(tuple(points))
    if format == "json":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as error:
            raise ParseError(f"invalid JSON report: {error}") from None
        points = [
            SweepPoint(
                stored_count=int(entry["stored_count"]),
                entropy=float(entry["entropy"]),
                contained_total=int(entry["contained_total"]),
                precision_expected=float(entry["precision_expected"]),
                precision_observed=float(entry["precision_observed"]),
            )
            for entry in payload
        ]
        return ExperimentReport(tuple(points))
    raise ConfigError(f"unknown report format {format!r}")
