"""Command-line front end: ``mine``, ``bench``, and ``check``.

The three subcommands mirror the three workflows: analyzing one series,
comparing algorithm strategies on it, and validating the engine against the
definitional reference miner. Exit codes: 0 success, 1 usage error, 2 data
error, 3 verification mismatch (``check`` only).
"""

from __future__ import annotations

import argparse
import os
import statistics
import sys
from collections import Counter
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .errors import ConfigError, DataError
from .ingest import build_run_config, load_series, parse_config
from .miner import ALGORITHMS, ORACLE_MAX_LEN, FrequentPattern, mine
from .oracle import oracle_mine
from .report import bench_row, build_report, write_bench, write_report

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_MISMATCH = 3

OUTPUT_DIR_ENV = "AOPMINE_OUTPUT_DIR"


class _Parser(argparse.ArgumentParser):
    # usage problems exit 1, not argparse's default 2
    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="aopmine", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_mine = sub.add_parser("mine", help="mine frequent patterns and write a JSON report")
    _add_run_flags(p_mine)
    p_mine.add_argument("--algorithm", choices=ALGORITHMS, help="mining strategy (default aop)")
    p_mine.add_argument(
        "--occurrences",
        action="store_const",
        const=True,
        default=None,
        help="always include occurrence positions in the report",
    )
    p_mine.add_argument("--output", help="report path (default <name>.report.json)")
    p_mine.set_defaults(func=cmd_mine)

    p_bench = sub.add_parser("bench", help="compare algorithm strategies on one dataset")
    _add_run_flags(p_bench)
    p_bench.add_argument(
        "--algorithms", required=True, help="comma-separated strategy names, e.g. aop,em"
    )
    p_bench.add_argument(
        "--repeat", type=int, default=1, help="timing repetitions per algorithm (default 1)"
    )
    p_bench.add_argument("--output", help="bench CSV path (default <name>.bench.csv)")
    p_bench.set_defaults(func=cmd_bench)

    p_check = sub.add_parser("check", help="cross-validate the engine against the reference miner")
    _add_run_flags(p_check)
    p_check.set_defaults(func=cmd_check)

    return parser


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", help="series file to read")
    p.add_argument("--format", choices=("plain", "csv"), help="series file format (default: by suffix)")
    p.add_argument("--column", help="csv column name or 0-based index (default 0)")
    p.add_argument("--delta", type=int, help="per-position rank error bound (default 0)")
    p.add_argument("--gamma", type=int, help="total rank error bound (default 0)")
    p.add_argument("--minsup", type=int, help="absolute occurrence-count threshold (required)")
    p.add_argument("--max-length", type=int, dest="max_length", help="cap on pattern length")
    p.add_argument("--config", help="flat key = value config file; flags override it")
    p.add_argument("--threads", type=int, default=1, help="engine worker count (default 1)")


def _collect_values(args: argparse.Namespace) -> dict[str, Any]:
    values = parse_config(args.config) if args.config else {}
    overrides = {
        "input": args.input,
        "format": args.format,
        "column": _parse_column(args.column),
        "delta": args.delta,
        "gamma": args.gamma,
        "minsup": args.minsup,
        "max_length": args.max_length,
        "algorithm": getattr(args, "algorithm", None),
        "output": getattr(args, "output", None),
        "occurrences": getattr(args, "occurrences", None),
    }
    for key, value in overrides.items():
        if value is not None:
            values[key] = value
    return values


def _parse_column(raw: str | None) -> int | str | None:
    if raw is None:
        return None
    return int(raw) if raw.lstrip("-").isdigit() else raw


def _resolve_output(explicit: Path | None, name: str, suffix: str) -> Path:
    if explicit is not None:
        return explicit
    return Path(os.environ.get(OUTPUT_DIR_ENV, ".")) / f"{name}.{suffix}"


def cmd_mine(args: argparse.Namespace) -> int:
    config = build_run_config(_collect_values(args))
    series = load_series(config.dataset)
    found, stats = mine(series, config.params, config.algorithm, threads=args.threads)
    report = build_report(
        dataset=series.name or "series",
        algorithm=config.algorithm,
        params=config.params,
        patterns=found,
        stats=stats if config.emit_stats else None,
        include_occurrences=config.emit_occurrences,
    )
    out_path = _resolve_output(config.output, series.name or "series", "report.json")
    write_report(report, out_path)
    _print_pattern_summary(found)
    print(f"report: {out_path}")
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    names = [token.strip() for token in args.algorithms.split(",") if token.strip()]
    if not names:
        raise ConfigError("--algorithms needs at least one name")
    for name in names:
        if name not in ALGORITHMS:
            raise ConfigError(f"unknown algorithm {name!r}; expected one of {ALGORITHMS}")
    if args.repeat < 1:
        raise ConfigError(f"--repeat must be >= 1, got {args.repeat}")

    config = build_run_config(_collect_values(args))
    series = load_series(config.dataset)
    rows = []
    outcomes: dict[str, tuple[FrequentPattern, ...]] = {}
    for name in names:
        times = []
        for _ in range(args.repeat):
            found, stats = mine(series, config.params, name, threads=args.threads)
            times.append(stats.wall_time)
        outcomes[name] = found
        stats.wall_time = statistics.fmean(times)
        rows.append(bench_row(name, len(found), stats))

    reference = {(fp.pattern, fp.support) for fp in outcomes[names[0]]}
    for name in names[1:]:
        got = {(fp.pattern, fp.support) for fp in outcomes[name]}
        if got != reference:
            print(
                f"warning: {name} and {names[0]} disagree on the frequent set",
                file=sys.stderr,
            )

    out_path = _resolve_output(config.output, series.name or "series", "bench.csv")
    text_path = write_bench(rows, out_path)
    for row in rows:
        print(
            f"{row.algorithm}: {row.pattern_count} patterns, "
            f"{row.total_candidates} candidates, "
            f"{row.matching_windows_tested} windows tested"
        )
    print(f"bench: {out_path}")
    print(f"table: {text_path}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    values = _collect_values(args)
    values.setdefault("max_length", 5)
    config = build_run_config(values)
    max_len = config.params.max_len
    if max_len > ORACLE_MAX_LEN:
        raise ConfigError(f"check needs --max-length <= {ORACLE_MAX_LEN} (exhaustive reference)")
    series = load_series(config.dataset)

    mined, _ = mine(series, config.params, "aop", threads=args.threads)
    reference = oracle_mine(series, config.params, max_len)
    mined_map = {fp.pattern: fp.support for fp in mined}
    reference_map = {fp.pattern: fp.support for fp in reference}

    print(f"engine:    {len(mined_map)} patterns")
    print(f"reference: {len(reference_map)} patterns")
    if mined_map == reference_map:
        print("verdict: MATCH")
        return EXIT_OK

    _print_diff(mined_map, reference_map)
    if len(set(series.values)) < len(series):
        # repeated values can tie inside windows, where screening is not
        # guaranteed lossless; report only
        print("verdict: DIVERGENCE (ties present; informational only)")
        return EXIT_OK
    print("verdict: MISMATCH")
    return EXIT_MISMATCH


def _print_pattern_summary(found: Sequence[FrequentPattern]) -> None:
    by_length = Counter(len(fp.pattern) for fp in found)
    print(f"patterns found: {len(found)}")
    for length in sorted(by_length):
        print(f"  length {length}: {by_length[length]}")


def _print_diff(mined: dict, reference: dict, limit: int = 20) -> None:
    shown = 0
    for pattern in sorted(set(mined) | set(reference), key=lambda p: (len(p), p)):
        left, right = mined.get(pattern), reference.get(pattern)
        if left == right:
            continue
        if shown == limit:
            print("  ...")
            break
        print(f"  {pattern}: engine={left} reference={right}")
        shown += 1
