"""Command line entry point.

Verbs: ``bench run`` executes a benchmark campaign from a config file,
``bench summarize`` recomputes the mean/std table from per-run CSVs,
``alloc run`` executes an allocation campaign, and ``fronts generate``
rebuilds the bundled reference-front data files.  Exit codes: 0 on
success, 1 on a configuration error, 2 on a runtime failure.
"""

import argparse
import dataclasses
import sys
from pathlib import Path

from ..problems.fronts import write_bundled_fronts
from . import campaign
from .campaign import ConfigError

_DISPLAY_COLUMNS = ("problem", "algorithm", "indicator", "count", "mean", "std", "source")


class _Parser(argparse.ArgumentParser):
    """Argument errors are configuration errors (exit code 1), not the
    argparse default of 2."""

    def error(self, message):
        raise ConfigError(message)


def build_parser():
    parser = _Parser(prog="greyleap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    bench = sub.add_parser("bench", help="benchmark campaigns")
    bench_sub = bench.add_subparsers(dest="subcommand", required=True)

    bench_run = bench_sub.add_parser(
        "run", help="run a benchmark campaign from a config file"
    )
    bench_run.add_argument("--config", required=True, help="YAML campaign config")
    bench_run.add_argument("--reps", type=int, help="override repetitions")
    bench_run.add_argument("--seed", type=int, help="override the base seed")
    bench_run.add_argument("--out", help="override the output directory")
    bench_run.add_argument(
        "--hv-ref",
        choices=("raw", "normalized"),
        help="hypervolume reference convention",
    )
    bench_run.add_argument(
        "--parallel", type=int, help="run up to N repetitions concurrently"
    )

    bench_sum = bench_sub.add_parser(
        "summarize", help="summarize per-run CSV files into a means table"
    )
    bench_sum.add_argument("run_files", nargs="+", help="per-run CSV file(s)")
    bench_sum.add_argument(
        "--out", help="directory for summary.csv (default: alongside the input)"
    )
    bench_sum.add_argument(
        "--published",
        action="store_true",
        help="append published reference values for the comparison algorithms",
    )

    alloc = sub.add_parser("alloc", help="allocation campaigns")
    alloc_sub = alloc.add_subparsers(dest="subcommand", required=True)
    alloc_run = alloc_sub.add_parser(
        "run", help="run a rolling-horizon allocation campaign"
    )
    alloc_run.add_argument("--config", help="YAML campaign config (default settings otherwise)")
    alloc_run.add_argument("--reps", type=int, help="override the seed count")
    alloc_run.add_argument("--seed", type=int, help="override the base seed")
    alloc_run.add_argument("--out", help="override the output directory")
    alloc_run.add_argument(
        "--parallel", type=int, default=1, help="run up to N scenarios concurrently"
    )

    fronts = sub.add_parser("fronts", help="reference front data")
    fronts_sub = fronts.add_subparsers(dest="subcommand", required=True)
    fronts_gen = fronts_sub.add_parser(
        "generate", help="regenerate the bundled reference front files"
    )
    fronts_gen.add_argument(
        "--out", help="target directory (default: the bundled package data)"
    )
    return parser


def _replace(config, **overrides):
    changed = {k: v for k, v in overrides.items() if v is not None}
    return dataclasses.replace(config, **changed) if changed else config


def _format_cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _print_summary(summary):
    rows = [
        [_format_cell(entry.get(name)) for name in _DISPLAY_COLUMNS]
        for entry in summary
    ]
    widths = [
        max(len(name), *(len(row[i]) for row in rows)) if rows else len(name)
        for i, name in enumerate(_DISPLAY_COLUMNS)
    ]
    header = "  ".join(name.ljust(w) for name, w in zip(_DISPLAY_COLUMNS, widths))
    print(header)
    print("-" * len(header))
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)))


def _cmd_bench_run(args):
    config = campaign.load_benchmark_config(args.config)
    config = _replace(
        config,
        repetitions=args.reps,
        base_seed=args.seed,
        out_dir=args.out,
        hv_mode=args.hv_ref,
        parallel=args.parallel,
    )
    report = campaign.run_benchmark_campaign(config)
    reused = report["total_runs"] - report["executed_runs"]
    print(f"{report['executed_runs']} run(s) executed, {reused} reused")
    for key in ("runs_csv", "timings_csv", "summary_csv"):
        print(f"wrote {report[key]}")
    return 0


def _cmd_bench_summarize(args):
    for path in args.run_files:
        if not Path(path).is_file():
            raise ConfigError(f"run file not found: {path}")
    summary = campaign.summarize(args.run_files)
    if args.published:
        problems = []
        for entry in summary:
            if entry["problem"] not in problems:
                problems.append(entry["problem"])
        summary.extend(campaign.published_summary_entries(problems))
    out_dir = Path(args.out) if args.out else Path(args.run_files[0]).parent
    out_dir.mkdir(parents=True, exist_ok=True)
    path = campaign.write_summary(summary, out_dir / "summary.csv")
    _print_summary(summary)
    print(f"wrote {path}")
    return 0


def _cmd_alloc_run(args):
    if args.config:
        config = campaign.load_allocation_config(args.config)
    else:
        config = campaign.AllocationConfig()
    config = _replace(
        config, seeds=args.reps, base_seed=args.seed, out_dir=args.out
    )
    report = campaign.run_allocation_campaign(config, parallel=args.parallel)
    for path in report["trace_files"]:
        print(f"wrote {path}")
    return 0


def _cmd_fronts_generate(args):
    target = Path(args.out) if args.out else None
    if target is not None:
        target.mkdir(parents=True, exist_ok=True)
    for path in write_bundled_fronts(target):
        print(f"wrote {path}")
    return 0


_COMMANDS = {
    ("bench", "run"): _cmd_bench_run,
    ("bench", "summarize"): _cmd_bench_summarize,
    ("alloc", "run"): _cmd_alloc_run,
    ("fronts", "generate"): _cmd_fronts_generate,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[(args.command, args.subcommand)](args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:
        print(f"runtime failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
