"""Serializing mining results and benchmark comparisons.

The JSON report schema and the bench CSV schema are documented in
docs/formats.md; any change to them bumps REPORT_SCHEMA_VERSION. Reports
serialize byte-identically for identical runs: key order is fixed and wall
time stays out of the JSON (it is hardware noise, not a result).
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Iterable, Sequence

from .core import MiningParams, OccurrenceSet, Pattern
from .errors import DataError
from .miner import FrequentPattern, MiningStats

REPORT_SCHEMA_VERSION = 1

# above this many total positions, occurrence lists are dropped from reports
# unless explicitly requested
OCCURRENCE_EMIT_LIMIT = 100_000

BENCH_COLUMNS = (
    "algorithm",
    "patterns",
    "candidates_by_length",
    "total_candidates",
    "matching_windows_tested",
    "patterns_pruned",
    "wall_time_s",
)


@dataclass(frozen=True)
class PatternEntry:
    ranks: Pattern
    support: int
    occurrences: OccurrenceSet | None = None


@dataclass(frozen=True)
class ReportStats:
    """Run counters as they appear in a report; wall time is excluded so
    repeated runs serialize byte-identically."""

    candidates_by_length: tuple[tuple[int, int], ...]
    total_candidates: int
    matching_windows_tested: int
    patterns_pruned_by_count: int


@dataclass(frozen=True)
class MiningReport:
    dataset: str
    algorithm: str
    params: MiningParams
    patterns: tuple[PatternEntry, ...]
    stats: ReportStats | None
    tool_version: str


@dataclass(frozen=True)
class BenchRow:
    """One algorithm's counters on a shared dataset and parameter set."""

    algorithm: str
    pattern_count: int
    candidates_by_length: tuple[tuple[int, int], ...]
    total_candidates: int
    matching_windows_tested: int
    patterns_pruned_by_count: int
    wall_time_s: float


def snapshot_stats(stats: MiningStats) -> ReportStats:
    return ReportStats(
        candidates_by_length=tuple(sorted(stats.candidates_generated.items())),
        total_candidates=stats.total_candidates,
        matching_windows_tested=stats.matching_windows_tested,
        patterns_pruned_by_count=stats.patterns_pruned_by_count,
    )


def build_report(
    dataset: str,
    algorithm: str,
    params: MiningParams,
    patterns: Sequence[FrequentPattern],
    stats: MiningStats | None = None,
    include_occurrences: bool | None = None,
) -> MiningReport:
    """Assemble the serializable record of one mining run.

    ``include_occurrences=None`` applies the automatic cutoff: position lists
    are kept unless they total more than OCCURRENCE_EMIT_LIMIT.
    """
    from aopmine import __version__

    if include_occurrences is None:
        include_occurrences = sum(fp.support for fp in patterns) <= OCCURRENCE_EMIT_LIMIT
    entries = tuple(
        PatternEntry(
            ranks=fp.pattern,
            support=fp.support,
            occurrences=fp.occurrences if include_occurrences else None,
        )
        for fp in sorted(patterns, key=lambda fp: (len(fp.pattern), fp.pattern))
    )
    return MiningReport(
        dataset=dataset,
        algorithm=algorithm,
        params=params,
        patterns=entries,
        stats=snapshot_stats(stats) if stats is not None else None,
        tool_version=__version__,
    )


def report_to_payload(report: MiningReport) -> dict[str, Any]:
    """The report as a JSON-ready dict with a fixed, documented key order."""
    patterns = []
    for entry in report.patterns:
        item: dict[str, Any] = {"ranks": list(entry.ranks), "support": entry.support}
        if entry.occurrences is not None:
            item["occurrences"] = list(entry.occurrences)
        patterns.append(item)
    stats = None
    if report.stats is not None:
        stats = {
            "candidates_by_length": {
                str(length): count for length, count in report.stats.candidates_by_length
            },
            "total_candidates": report.stats.total_candidates,
            "matching_windows_tested": report.stats.matching_windows_tested,
            "patterns_pruned_by_count": report.stats.patterns_pruned_by_count,
        }
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "tool_version": report.tool_version,
        "dataset": report.dataset,
        "algorithm": report.algorithm,
        "params": {
            "delta": report.params.delta,
            "gamma": report.params.gamma,
            "minsup": report.params.minsup,
            "max_len": report.params.max_len,
        },
        "patterns": patterns,
        "stats": stats,
    }


def write_report(report: MiningReport, path: str | Path) -> None:
    """Write the report as JSON; identical reports produce identical bytes."""
    path = Path(path)
    payload = report_to_payload(report)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        raise DataError(f"cannot write report {path}: {exc}") from exc


def read_report(path: str | Path) -> MiningReport:
    """Parse a report file back into the in-memory value it came from."""
    path = Path(path)
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise DataError(f"cannot read report {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: not a valid report: {exc}") from exc
    params = payload["params"]
    stats = payload.get("stats")
    return MiningReport(
        dataset=payload["dataset"],
        algorithm=payload["algorithm"],
        params=MiningParams(
            delta=params["delta"],
            gamma=params["gamma"],
            minsup=params["minsup"],
            max_len=params["max_len"],
        ),
        patterns=tuple(
            PatternEntry(
                ranks=tuple(item["ranks"]),
                support=item["support"],
                occurrences=tuple(item["occurrences"]) if "occurrences" in item else None,
            )
            for item in payload["patterns"]
        ),
        stats=ReportStats(
            candidates_by_length=tuple(
                sorted((int(k), v) for k, v in stats["candidates_by_length"].items())
            ),
            total_candidates=stats["total_candidates"],
            matching_windows_tested=stats["matching_windows_tested"],
            patterns_pruned_by_count=stats["patterns_pruned_by_count"],
        )
        if stats is not None
        else None,
        tool_version=payload["tool_version"],
    )


def bench_row(algorithm: str, pattern_count: int, stats: MiningStats) -> BenchRow:
    return BenchRow(
        algorithm=algorithm,
        pattern_count=pattern_count,
        candidates_by_length=tuple(sorted(stats.candidates_generated.items())),
        total_candidates=stats.total_candidates,
        matching_windows_tested=stats.matching_windows_tested,
        patterns_pruned_by_count=stats.patterns_pruned_by_count,
        wall_time_s=stats.wall_time,
    )


def write_bench(rows: Iterable[BenchRow], path: str | Path) -> Path:
    """Write the benchmark table as CSV plus an aligned text rendering.

    The text file lands next to the CSV with a ``.txt`` suffix and its path
    is returned. Rows are expected to agree on what is frequent; differing
    pattern counts are flagged in the text rendering.
    """
    rows = list(rows)
    path = Path(path)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(BENCH_COLUMNS)
            for row in rows:
                writer.writerow(_bench_cells(row))
    except OSError as exc:
        raise DataError(f"cannot write bench table {path}: {exc}") from exc

    text_path = path.with_suffix(".txt")
    lines = _render_text_table([list(BENCH_COLUMNS)] + [_bench_cells(r) for r in rows])
    if len({row.pattern_count for row in rows}) > 1:
        lines.append("WARNING: pattern counts differ across algorithms")
    try:
        text_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot write bench table {text_path}: {exc}") from exc
    return text_path


def _bench_cells(row: BenchRow) -> list[str]:
    by_length = " ".join(f"{length}:{count}" for length, count in row.candidates_by_length)
    return [
        row.algorithm,
        str(row.pattern_count),
        by_length,
        str(row.total_candidates),
        str(row.matching_windows_tested),
        str(row.patterns_pruned_by_count),
        f"{row.wall_time_s:.6f}",
    ]


def _render_text_table(cells: list[list[str]]) -> list[str]:
    widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
    lines = []
    for idx, row in enumerate(cells):
        lines.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * width for width in widths))
    return lines
