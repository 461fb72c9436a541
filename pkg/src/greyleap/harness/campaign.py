"""Seeded experiment campaigns over problems and algorithms.

A campaign expands (problem, algorithm, repetition) into runs with
per-repetition seeds derived by stable hashing, executes them (reusing
any completed-run manifests found in the output directory), and emits
CSV reports: per-run indicator rows, a per-run timing table, and a
mean/std summary per (problem, algorithm, indicator).

Campaign outputs other than timings are a pure function of the
configuration: rerunning with identical settings rewrites byte-identical
``runs.csv`` and ``summary.csv`` files.  Wall-clock timings live in a
separate ``timings.csv`` precisely so the deterministic files never
carry machine-dependent values.
"""

import csv
import dataclasses
import hashlib
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

import numpy as np
import yaml

from ..allocation import (
    DEFICIT_RANGE,
    DEMAND_RANGE,
    OVERSHOOT_PENALTY,
    SUPPLY_RANGE,
    generate_scenario,
    rolling_horizon_run,
)
from ..core import ContractError
from ..indicators import IndicatorSettings
from ..nsga2 import Nsga2Params, nsga2_run
from ..optimizer import AlgorithmParams, run
from ..problems import get_problem, problem_names
from ..problems.fronts import reference_front
from .published import published_for

INDICATORS = ("hv", "igd", "spread", "gd")

RUN_FIELDS = (
    "experiment_id",
    "problem",
    "algorithm",
    "seed",
    "evals_used",
    "hv",
    "igd",
    "spread",
    "gd",
)

TIMING_FIELDS = ("experiment_id", "problem", "algorithm", "seed", "wallclock_ms")

SUMMARY_FIELDS = ("problem", "algorithm", "indicator", "count", "mean", "std", "source")

ALGORITHMS = {
    "MSGW-FLM": (AlgorithmParams, run),
    "NSGA-II": (Nsga2Params, nsga2_run),
}


class ConfigError(Exception):
    """A configuration problem detectable before any run starts."""


def algorithm_names():
    """Registered algorithm identifiers in registry order."""
    return list(ALGORITHMS)


def experiment_id(problem, algorithm):
    """Stable identifier of one (problem, algorithm) experiment."""
    return f"{problem}:{algorithm}"


def derive_seed(base_seed, experiment, rep):
    """Per-repetition seed: base seed plus a stable hash of the
    experiment id and repetition index, reduced to 64 bits."""
    digest = hashlib.sha256(f"{experiment}:{rep}".encode()).digest()
    return (int(base_seed) + int.from_bytes(digest[:8], "big")) % 2**64


def _require(condition, message):
    if not condition:
        raise ConfigError(message)


def _check_ids(given, known, kind):
    unknown = [g for g in given if g not in known]
    if unknown:
        raise ConfigError(
            f"unknown {kind} {', '.join(map(repr, unknown))}; "
            f"valid ids: {', '.join(known)}"
        )


def _build_params(algorithm, overrides):
    """Parameter object for ``algorithm`` with ``overrides`` applied;
    unknown fields and invalid values become configuration errors."""
    cls, _ = ALGORITHMS[algorithm]
    valid = {f.name for f in dataclasses.fields(cls)}
    unknown = sorted(set(overrides) - valid)
    if unknown:
        raise ConfigError(
            f"unknown {algorithm} parameter(s) {', '.join(unknown)}; "
            f"valid fields: {', '.join(sorted(valid))}"
        )
    try:
        params = cls(**overrides)
        params.validate()
    except ContractError as exc:
        raise ConfigError(f"invalid {algorithm} parameters: {exc}") from None
    return params


@dataclass
class ExperimentConfig:
    """One benchmark campaign: problems by algorithms by repetitions.

    ``algorithm_params`` maps algorithm ids to field overrides applied
    on top of that algorithm's defaults.  ``hv_mode`` selects the
    hypervolume convention ("raw" anchors at the all-ones point in raw
    objective space, "normalized" rescales by the reference front and
    anchors at 1.1 per objective).
    """

    problems: tuple
    algorithms: tuple = ("MSGW-FLM",)
    repetitions: int = 100
    base_seed: int = 0
    hv_mode: str = "raw"
    out_dir: str = "results"
    algorithm_params: dict = field(default_factory=dict)
    include_published: bool = False
    parallel: int = 1

    def __post_init__(self):
        if isinstance(self.problems, str):
            self.problems = (
                tuple(problem_names()) if self.problems == "all" else (self.problems,)
            )
        else:
            self.problems = tuple(self.problems)
        if isinstance(self.algorithms, str):
            self.algorithms = (self.algorithms,)
        else:
            self.algorithms = tuple(self.algorithms)

    def validate(self):
        _require(len(self.problems) > 0, "at least one problem id is required")
        _require(len(self.algorithms) > 0, "at least one algorithm id is required")
        _check_ids(self.problems, problem_names(), "problem id(s)")
        _check_ids(self.algorithms, algorithm_names(), "algorithm id(s)")
        _require(self.repetitions >= 1, "repetitions must be at least 1")
        _require(self.base_seed >= 0, "base_seed must be non-negative")
        _require(
            self.hv_mode in ("raw", "normalized"),
            "hv_mode must be 'raw' or 'normalized'",
        )
        _require(self.parallel >= 1, "parallel must be at least 1")
        _require(
            isinstance(self.algorithm_params, dict),
            "algorithm_params must map algorithm ids to override mappings",
        )
        _check_ids(self.algorithm_params, algorithm_names(), "algorithm id(s)")
        for algorithm, overrides in self.algorithm_params.items():
            _build_params(algorithm, overrides)

    @classmethod
    def from_mapping(cls, mapping):
        valid = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(mapping) - valid)
        if unknown:
            raise ConfigError(
                f"unknown config key(s) {', '.join(unknown)}; "
                f"valid keys: {', '.join(sorted(valid))}"
            )
        if "problems" not in mapping:
            raise ConfigError("config must list the problems to run")
        return cls(**mapping)


class _RunJob(NamedTuple):
    problem: str
    algorithm: str
    rep: int
    seed: int
    params: dict
    hv_mode: str


def _job_fingerprint(job):
    """Content hash deciding whether a stored manifest still matches
    the configured run; any change in seed, parameters, or indicator
    convention forces re-execution."""
    payload = json.dumps(
        {
            "problem": job.problem,
            "algorithm": job.algorithm,
            "rep": job.rep,
            "seed": job.seed,
            "params": job.params,
            "hv_mode": job.hv_mode,
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def _manifest_path(runs_dir, job):
    safe_alg = job.algorithm.replace("/", "-")
    return Path(runs_dir) / f"{job.problem}__{safe_alg}__r{job.rep:04d}.json"


def _load_manifest(runs_dir, job):
    path = _manifest_path(runs_dir, job)
    try:
        manifest = json.loads(path.read_text())
    except (FileNotFoundError, json.JSONDecodeError):
        return None
    if manifest.get("fingerprint") != _job_fingerprint(job):
        return None
    return manifest


def _indicator_settings(problem, hv_mode):
    return IndicatorSettings(reference=reference_front(problem), hv_mode=hv_mode)


def _execute_benchmark_run(job):
    """Run one seeded (problem, algorithm) repetition and score its
    final archive; returns the manifest payload."""
    problem = get_problem(job.problem)
    cls, runner = ALGORITHMS[job.algorithm]
    params = cls(**job.params)
    settings = _indicator_settings(job.problem, job.hv_mode)
    start = time.perf_counter()
    record = runner(problem, params, seed=job.seed)
    wallclock_ms = (time.perf_counter() - start) * 1000.0
    F = np.asarray(record.archive_objectives, dtype=float)
    return {
        "experiment_id": experiment_id(job.problem, job.algorithm),
        "problem": job.problem,
        "algorithm": job.algorithm,
        "rep": job.rep,
        "seed": job.seed,
        "hv_mode": job.hv_mode,
        "evals_used": int(record.evals_used),
        "hv": float(settings.hypervolume_of(F)),
        "igd": float(settings.igd_of(F)),
        "spread": float(settings.spread_of(F)),
        "gd": float(settings.gd_of(F)),
        "wallclock_ms": float(wallclock_ms),
        "fingerprint": _job_fingerprint(job),
    }


def _write_manifest(runs_dir, job, manifest):
    path = _manifest_path(runs_dir, job)
    path.write_text(json.dumps(manifest, sort_keys=True, indent=2) + "\n")


def _csv_cell(value):
    if value is None:
        return ""
    if isinstance(value, float):
        return str(value)
    return str(value)


def _write_csv(path, fieldnames, rows):
    """Write dict rows with a fixed header; unix newlines keep the
    bytes platform-independent."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(fieldnames)
        for row in rows:
            writer.writerow([_csv_cell(row.get(name)) for name in fieldnames])
    return Path(path)


def run_benchmark_campaign(config):
    """Execute every configured run and write the report files.

    Completed-run manifests under ``<out_dir>/runs/`` are reused when
    their fingerprints still match, so an interrupted campaign resumes
    where it stopped.  Returns the paths of the written files.
    """
    config.validate()
    out_dir = Path(config.out_dir)
    runs_dir = out_dir / "runs"
    runs_dir.mkdir(parents=True, exist_ok=True)

    jobs = []
    for problem in config.problems:
        for algorithm in config.algorithms:
            overrides = config.algorithm_params.get(algorithm, {})
            params = dataclasses.asdict(_build_params(algorithm, overrides))
            eid = experiment_id(problem, algorithm)
            for rep in range(config.repetitions):
                seed = derive_seed(config.base_seed, eid, rep)
                jobs.append(
                    _RunJob(problem, algorithm, rep, seed, params, config.hv_mode)
                )

    pending = [job for job in jobs if _load_manifest(runs_dir, job) is None]
    if config.parallel > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=config.parallel) as pool:
            for job, manifest in zip(pending, pool.map(_execute_benchmark_run, pending)):
                _write_manifest(runs_dir, job, manifest)
    else:
        for job in pending:
            _write_manifest(runs_dir, job, _execute_benchmark_run(job))

    manifests = []
    for job in jobs:
        manifest = _load_manifest(runs_dir, job)
        if manifest is None:
            raise RuntimeError(f"manifest missing after execution: {job}")
        manifests.append(manifest)

    runs_csv = _write_csv(out_dir / "runs.csv", RUN_FIELDS, manifests)
    timings_csv = _write_csv(out_dir / "timings.csv", TIMING_FIELDS, manifests)
    summary = summarize_rows(manifests)
    if config.include_published:
        summary.extend(published_summary_entries(config.problems))
    summary_csv = write_summary(summary, out_dir / "summary.csv")
    return {
        "out_dir": out_dir,
        "runs_csv": runs_csv,
        "timings_csv": timings_csv,
        "summary_csv": summary_csv,
        "total_runs": len(jobs),
        "executed_runs": len(pending),
    }


def published_summary_entries(problems):
    """Published reference values shaped as summary entries, flagged
    ``published`` with empty count and std."""
    return [
        {
            "problem": row["problem"],
            "algorithm": row["algorithm"],
            "indicator": row["indicator"],
            "count": None,
            "mean": row["value"],
            "std": None,
            "source": "published",
        }
        for row in published_for(problems)
    ]


def summarize_rows(rows):
    """Mean and sample standard deviation per (problem, algorithm,
    indicator) over in-memory run rows, in first-appearance order."""
    groups = {}
    order = []
    for row in rows:
        key = (row["problem"], row["algorithm"])
        if key not in groups:
            groups[key] = {name: [] for name in INDICATORS}
            order.append(key)
        for name in INDICATORS:
            value = row.get(name)
            if value is not None:
                groups[key][name].append(float(value))
    summary = []
    for problem, algorithm in order:
        for name in INDICATORS:
            values = groups[(problem, algorithm)][name]
            if not values:
                continue
            n = len(values)
            mean = math.fsum(values) / n
            if n > 1:
                std = math.sqrt(
                    math.fsum((v - mean) ** 2 for v in values) / (n - 1)
                )
            else:
                std = None
            summary.append(
                {
                    "problem": problem,
                    "algorithm": algorithm,
                    "indicator": name,
                    "count": n,
                    "mean": mean,
                    "std": std,
                    "source": "measured",
                }
            )
    return summary


def _parse_run_row(record, path, line):
    parsed = {}
    if record.get(None) is not None:
        raise ValueError(f"{path}, line {line}: too many fields")
    if any(value is None for value in record.values()):
        raise ValueError(f"{path}, line {line}: too few fields")
    for key in ("problem", "algorithm"):
        value = record.get(key)
        if value is None or value == "":
            raise ValueError(f"{path}, line {line}: missing {key}")
        parsed[key] = value
    for key in ("experiment_id",):
        if record.get(key):
            parsed[key] = record[key]
    for key, cast in (("seed", int), ("evals_used", int)):
        value = record.get(key)
        if value not in (None, ""):
            try:
                parsed[key] = cast(value)
            except ValueError:
                raise ValueError(
                    f"{path}, line {line}: bad {key} value {value!r}"
                ) from None
    for name in INDICATORS:
        value = record.get(name)
        if value in (None, ""):
            continue
        try:
            parsed[name] = float(value)
        except ValueError:
            raise ValueError(
                f"{path}, line {line}: bad {name} value {value!r}"
            ) from None
    return parsed


def read_runs_csv(path):
    """Parse one per-run CSV; malformed rows report file and line."""
    rows = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh, restkey=None)
        names = reader.fieldnames or ()
        for key in ("problem", "algorithm"):
            if key not in names:
                raise ValueError(f"{path}: missing required column {key!r}")
        for record in reader:
            rows.append(_parse_run_row(record, path, reader.line_num))
    return rows


def summarize(paths):
    """Summary rows for one or more per-run CSV files."""
    if not paths:
        raise ConfigError("at least one run file is required")
    rows = []
    for path in paths:
        rows.extend(read_runs_csv(path))
    return summarize_rows(rows)


def write_summary(summary, path):
    """Write summary rows; empty std marks single-run groups and empty
    count/std mark published reference rows."""
    return _write_csv(path, SUMMARY_FIELDS, summary)


@dataclass
class AllocationConfig:
    """One allocation campaign over center/site configurations.

    Each configuration pair (centers, sites) is run for ``seeds``
    scenarios; ``optimizer`` holds field overrides for the per-cycle
    optimizer.  ``supply_scale`` multiplies all generated supplies,
    with 0 modeling a total supply failure.
    """

    configurations: tuple = ((5, 5), (5, 8), (8, 5))
    cycles: int = 5
    seeds: int = 30
    base_seed: int = 0
    horizon: int = 2
    demand_range: tuple = DEMAND_RANGE
    supply_range: tuple = SUPPLY_RANGE
    initial_deficit_range: tuple = DEFICIT_RANGE
    penalty_weight: float = OVERSHOOT_PENALTY
    supply_scale: float = 1.0
    out_dir: str = "results"
    optimizer: dict = field(default_factory=dict)

    def __post_init__(self):
        self.configurations = tuple(
            (int(nc), int(ns)) for nc, ns in self.configurations
        )
        self.demand_range = tuple(float(v) for v in self.demand_range)
        self.supply_range = tuple(float(v) for v in self.supply_range)
        self.initial_deficit_range = tuple(
            float(v) for v in self.initial_deficit_range
        )

    def validate(self):
        _require(len(self.configurations) > 0, "at least one configuration pair")
        for nc, ns in self.configurations:
            _require(nc > 0 and ns > 0, "configuration counts must be positive")
        _require(self.cycles >= 1, "cycles must be at least 1")
        _require(self.seeds >= 1, "seeds must be at least 1")
        _require(self.base_seed >= 0, "base_seed must be non-negative")
        _require(self.horizon >= 1, "horizon must be at least 1")
        for label, rng in (
            ("demand_range", self.demand_range),
            ("supply_range", self.supply_range),
            ("initial_deficit_range", self.initial_deficit_range),
        ):
            _require(
                len(rng) == 2 and 0 <= rng[0] <= rng[1],
                f"{label} must be a non-negative (low, high) pair",
            )
        _require(self.penalty_weight >= 0, "penalty_weight must be non-negative")
        _require(self.supply_scale >= 0, "supply_scale must be non-negative")
        _build_params("MSGW-FLM", self.optimizer)

    @classmethod
    def from_mapping(cls, mapping):
        mapping = dict(mapping)
        ranges = mapping.pop("ranges", None)
        if ranges is not None:
            aliases = {
                "demand": "demand_range",
                "supply": "supply_range",
                "initial_deficit": "initial_deficit_range",
            }
            unknown = sorted(set(ranges) - set(aliases))
            if unknown:
                raise ConfigError(
                    f"unknown ranges key(s) {', '.join(unknown)}; "
                    f"valid keys: {', '.join(sorted(aliases))}"
                )
            for alias, fieldname in aliases.items():
                if alias in ranges:
                    mapping[fieldname] = ranges[alias]
        valid = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(mapping) - valid)
        if unknown:
            raise ConfigError(
                f"unknown config key(s) {', '.join(unknown)}; "
                f"valid keys: {', '.join(sorted(valid | {'ranges'}))}"
            )
        return cls(**mapping)


class _AllocationJob(NamedTuple):
    n_centers: int
    n_sites: int
    seed_index: int
    seed: int
    cycles: int
    horizon: int
    demand_range: tuple
    supply_range: tuple
    initial_deficit_range: tuple
    penalty_weight: float
    supply_scale: float
    optimizer: dict


def _execute_allocation_run(job):
    """Generate one scenario and run its full rolling horizon; returns
    the per-cycle loss trace row."""
    scenario = generate_scenario(
        job.n_centers,
        job.n_sites,
        job.cycles,
        job.seed,
        demand_range=job.demand_range,
        supply_range=job.supply_range,
        initial_deficit_range=job.initial_deficit_range,
    )
    if job.supply_scale != 1.0:
        scenario.supplies = scenario.supplies * job.supply_scale
    params = AlgorithmParams(**job.optimizer)
    result = rolling_horizon_run(
        scenario,
        params,
        base_seed=job.seed,
        horizon=job.horizon,
        penalty=job.penalty_weight,
    )
    return {
        "seed_index": job.seed_index,
        "seed": job.seed,
        "losses": [float(v) for v in result.losses],
        "zero_attained_cycle": result.zero_attained_cycle,
    }


def run_allocation_campaign(config, parallel=1):
    """Run every (configuration, seed) scenario and write one loss-trace
    CSV per configuration, each ending with the cross-seed mean row."""
    config.validate()
    _require(parallel >= 1, "parallel must be at least 1")
    out_dir = Path(config.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    jobs = []
    for nc, ns in config.configurations:
        for s in range(config.seeds):
            seed = derive_seed(config.base_seed, f"alloc:{nc}x{ns}", s)
            jobs.append(
                _AllocationJob(
                    nc,
                    ns,
                    s,
                    seed,
                    config.cycles,
                    config.horizon,
                    config.demand_range,
                    config.supply_range,
                    config.initial_deficit_range,
                    config.penalty_weight,
                    config.supply_scale,
                    config.optimizer,
                )
            )

    if parallel > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=parallel) as pool:
            results = list(pool.map(_execute_allocation_run, jobs))
    else:
        results = [_execute_allocation_run(job) for job in jobs]

    loss_fields = [f"loss_cycle_{t + 1}" for t in range(config.cycles)]
    fieldnames = ["seed_index", "seed", *loss_fields, "zero_attained_cycle"]
    trace_files = []
    for nc, ns in config.configurations:
        picked = [
            result
            for job, result in zip(jobs, results)
            if (job.n_centers, job.n_sites) == (nc, ns)
        ]
        rows = []
        for result in picked:
            row = {"seed_index": result["seed_index"], "seed": result["seed"]}
            row.update(zip(loss_fields, result["losses"]))
            row["zero_attained_cycle"] = result["zero_attained_cycle"]
            rows.append(row)
        mean_trace = np.mean([result["losses"] for result in picked], axis=0)
        mean_row = {"seed_index": "mean"}
        mean_row.update(zip(loss_fields, (float(v) for v in mean_trace)))
        rows.append(mean_row)
        path = _write_csv(out_dir / f"alloc_{nc}x{ns}.csv", fieldnames, rows)
        trace_files.append(path)
    return {"out_dir": out_dir, "trace_files": trace_files}


def _load_yaml_mapping(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = yaml.safe_load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except yaml.YAMLError as exc:
        raise ConfigError(f"could not parse {path}: {exc}") from None
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must contain a mapping at the top level")
    return data


def load_benchmark_config(path):
    """Benchmark campaign configuration from a YAML mapping file."""
    return ExperimentConfig.from_mapping(_load_yaml_mapping(path))


def load_allocation_config(path):
    """Allocation campaign configuration from a YAML mapping file."""
    return AllocationConfig.from_mapping(_load_yaml_mapping(path))
