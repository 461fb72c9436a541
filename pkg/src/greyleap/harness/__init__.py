"""Experiment harness: seeded campaigns, summaries, and the CLI."""

from .campaign import (
    AllocationConfig,
    ConfigError,
    ExperimentConfig,
    algorithm_names,
    derive_seed,
    experiment_id,
    load_allocation_config,
    load_benchmark_config,
    published_summary_entries,
    run_allocation_campaign,
    run_benchmark_campaign,
    summarize,
    summarize_rows,
    write_summary,
)
from .published import published_for, published_indicators

__all__ = [
    "AllocationConfig",
    "ConfigError",
    "ExperimentConfig",
    "algorithm_names",
    "derive_seed",
    "experiment_id",
    "load_allocation_config",
    "load_benchmark_config",
    "published_for",
    "published_indicators",
    "published_summary_entries",
    "run_allocation_campaign",
    "run_benchmark_campaign",
    "summarize",
    "summarize_rows",
    "write_summary",
]
