"""Tests for the campaign harness and its command line interface."""

import csv
import json
import math
from pathlib import Path

import numpy as np
import pytest

from greyleap.harness import campaign
from greyleap.harness.campaign import (
    AllocationConfig,
    ConfigError,
    ExperimentConfig,
    derive_seed,
    experiment_id,
    published_summary_entries,
    read_runs_csv,
    run_allocation_campaign,
    run_benchmark_campaign,
    summarize,
    summarize_rows,
    write_summary,
)
from greyleap.harness.cli import main
from greyleap.harness.published import published_for, published_indicators
from greyleap.indicators import IndicatorSettings
from greyleap.optimizer import AlgorithmParams, run
from greyleap.problems import problem_names
from greyleap.problems.fronts import reference_front

_TINY_OPTIMIZER = {
    "population_size": 20,
    "memeplex_count": 5,
    "archive_max": 20,
    "max_fitness_evals": 600,
}


def _tiny_config(tmp_path, **overrides):
    settings = dict(
        problems=("ZDT1",),
        algorithms=("MSGW-FLM",),
        repetitions=2,
        base_seed=3,
        out_dir=str(tmp_path / "out"),
        algorithm_params={"MSGW-FLM": dict(_TINY_OPTIMIZER)},
    )
    settings.update(overrides)
    return ExperimentConfig(**settings)


def _read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.reader(fh))


class TestDeriveSeed:
    def test_deterministic(self):
        assert derive_seed(5, "ZDT1:MSGW-FLM", 3) == derive_seed(5, "ZDT1:MSGW-FLM", 3)

    def test_distinct_across_reps_and_experiments(self):
        seeds = {
            derive_seed(0, eid, rep)
            for eid in ("ZDT1:MSGW-FLM", "ZDT1:NSGA-II", "ZDT2:MSGW-FLM")
            for rep in range(50)
        }
        assert len(seeds) == 150

    def test_uint64_range(self):
        for rep in range(20):
            seed = derive_seed(2**63, "ZDT4:NSGA-II", rep)
            assert 0 <= seed < 2**64

    def test_base_seed_shifts(self):
        base = derive_seed(0, "WFG1:MSGW-FLM", 7)
        assert derive_seed(41, "WFG1:MSGW-FLM", 7) == (base + 41) % 2**64


class TestExperimentConfig:
    def test_defaults(self):
        config = ExperimentConfig(problems=("ZDT1",))
        assert config.algorithms == ("MSGW-FLM",)
        assert config.repetitions == 100
        assert config.hv_mode == "raw"
        assert config.parallel == 1
        config.validate()

    def test_all_expands_to_registry(self):
        config = ExperimentConfig(problems="all")
        assert config.problems == tuple(problem_names())
        assert len(config.problems) == 28

    def test_scalar_strings_wrapped(self):
        config = ExperimentConfig(problems="ZDT1", algorithms="NSGA-II")
        assert config.problems == ("ZDT1",)
        assert config.algorithms == ("NSGA-II",)

    def test_unknown_problem_lists_valid_ids(self):
        with pytest.raises(ConfigError, match="ZDT1.*LZ09_F9"):
            ExperimentConfig(problems=("NOPE",)).validate()

    def test_unknown_algorithm_lists_valid_ids(self):
        with pytest.raises(ConfigError, match="MSGW-FLM, NSGA-II"):
            ExperimentConfig(problems=("ZDT1",), algorithms=("SPEA2",)).validate()

    @pytest.mark.parametrize(
        "overrides",
        [
            {"problems": ()},
            {"algorithms": ()},
            {"repetitions": 0},
            {"base_seed": -1},
            {"hv_mode": "fancy"},
            {"parallel": 0},
        ],
    )
    def test_invalid_settings(self, overrides):
        settings = dict(problems=("ZDT1",))
        settings.update(overrides)
        with pytest.raises(ConfigError):
            ExperimentConfig(**settings).validate()

    def test_params_for_unknown_algorithm(self):
        config = ExperimentConfig(
            problems=("ZDT1",), algorithm_params={"SPEA2": {}}
        )
        with pytest.raises(ConfigError, match="algorithm id"):
            config.validate()

    def test_unknown_param_field_lists_valid(self):
        config = ExperimentConfig(
            problems=("ZDT1",), algorithm_params={"MSGW-FLM": {"swarm": 3}}
        )
        with pytest.raises(ConfigError, match="swarm.*population_size"):
            config.validate()

    def test_invalid_param_value(self):
        config = ExperimentConfig(
            problems=("ZDT1",),
            algorithm_params={"MSGW-FLM": {"population_size": -5}},
        )
        with pytest.raises(ConfigError, match="invalid MSGW-FLM parameters"):
            config.validate()

    def test_from_mapping_unknown_key(self):
        with pytest.raises(ConfigError, match="unknown config key"):
            ExperimentConfig.from_mapping({"problems": ["ZDT1"], "reps": 3})

    def test_from_mapping_requires_problems(self):
        with pytest.raises(ConfigError, match="problems"):
            ExperimentConfig.from_mapping({"repetitions": 3})


class TestSummarizeRows:
    def test_mean_and_sample_std(self):
        rows = [
            {"problem": "ZDT1", "algorithm": "A", "hv": 0.6},
            {"problem": "ZDT1", "algorithm": "A", "hv": 0.8},
        ]
        (entry,) = summarize_rows(rows)
        assert entry["count"] == 2
        assert abs(entry["mean"] - 0.7) < 1e-12
        assert abs(entry["std"] - math.sqrt(0.02)) < 1e-12
        assert round(entry["std"], 4) == 0.1414

    def test_single_run_has_no_std(self):
        (entry,) = summarize_rows([{"problem": "P", "algorithm": "A", "igd": 0.25}])
        assert entry["mean"] == 0.25
        assert entry["count"] == 1
        assert entry["std"] is None

    def test_mixed_indicators_grouped(self):
        rows = [
            {"problem": "P", "algorithm": "A", "hv": 1.0},
            {"problem": "P", "algorithm": "A", "igd": 0.5},
            {"problem": "P", "algorithm": "B", "hv": 2.0},
        ]
        summary = summarize_rows(rows)
        keys = [(e["problem"], e["algorithm"], e["indicator"]) for e in summary]
        assert keys == [("P", "A", "hv"), ("P", "A", "igd"), ("P", "B", "hv")]
        assert [e["count"] for e in summary] == [1, 1, 1]

    def test_first_appearance_order(self):
        rows = [
            {"problem": "Z2", "algorithm": "A", "hv": 1.0},
            {"problem": "Z1", "algorithm": "A", "hv": 1.0},
            {"problem": "Z2", "algorithm": "A", "hv": 2.0},
        ]
        summary = summarize_rows(rows)
        assert [e["problem"] for e in summary] == ["Z2", "Z1"]
        assert summary[0]["count"] == 2

    def test_matches_numpy_recomputation(self):
        rng = np.random.default_rng(11)
        values = rng.random(40)
        rows = [
            {"problem": "P", "algorithm": "A", "spread": float(v)} for v in values
        ]
        (entry,) = summarize_rows(rows)
        assert abs(entry["mean"] - np.mean(values)) < 1e-12
        assert abs(entry["std"] - np.std(values, ddof=1)) < 1e-12


class TestReadRunsCsv:
    def _write(self, tmp_path, lines):
        path = tmp_path / "runs.csv"
        path.write_text("\n".join(lines) + "\n")
        return path

    def test_round_trip(self, tmp_path):
        path = self._write(
            tmp_path,
            [
                "experiment_id,problem,algorithm,seed,evals_used,hv,igd,spread,gd",
                "ZDT1:A,ZDT1,A,7,600,0.5,0.1,0.9,0.2",
            ],
        )
        (row,) = read_runs_csv(path)
        assert row["problem"] == "ZDT1"
        assert row["seed"] == 7
        assert row["hv"] == 0.5
        assert row["gd"] == 0.2

    def test_empty_indicator_cells_skipped(self, tmp_path):
        path = self._write(
            tmp_path,
            ["problem,algorithm,hv,igd", "ZDT1,A,0.5,", "ZDT1,A,,0.1"],
        )
        rows = read_runs_csv(path)
        assert "igd" not in rows[0] and "hv" not in rows[1]
        summary = summarize_rows(rows)
        assert [(e["indicator"], e["count"]) for e in summary] == [
            ("hv", 1),
            ("igd", 1),
        ]

    def test_bad_float_reports_file_and_line(self, tmp_path):
        path = self._write(
            tmp_path,
            ["problem,algorithm,hv", "ZDT1,A,0.5", "ZDT1,A,oops"],
        )
        with pytest.raises(ValueError, match=rf"{path}, line 3: bad hv"):
            read_runs_csv(path)

    def test_too_many_fields_reports_line(self, tmp_path):
        path = self._write(
            tmp_path,
            ["problem,algorithm,hv", "ZDT1,A,0.5,0.9"],
        )
        with pytest.raises(ValueError, match="line 2: too many fields"):
            read_runs_csv(path)

    def test_too_few_fields_reports_line(self, tmp_path):
        path = self._write(
            tmp_path,
            ["problem,algorithm,hv,igd", "ZDT1,A,0.5"],
        )
        with pytest.raises(ValueError, match="line 2: too few fields"):
            read_runs_csv(path)

    def test_missing_required_column(self, tmp_path):
        path = self._write(tmp_path, ["problem,hv", "ZDT1,0.5"])
        with pytest.raises(ValueError, match="algorithm"):
            read_runs_csv(path)

    def test_summarize_requires_paths(self):
        with pytest.raises(ConfigError):
            summarize([])

    def test_summarize_fixture_file(self, tmp_path):
        path = self._write(
            tmp_path,
            [
                "problem,algorithm,hv,igd",
                "ZDT1,A,0.6,0.01",
                "ZDT1,A,0.8,0.03",
                "ZDT2,A,0.4,",
            ],
        )
        summary = summarize([path])
        by_key = {
            (e["problem"], e["indicator"]): e["mean"] for e in summary
        }
        assert abs(by_key[("ZDT1", "hv")] - 0.7) < 1e-12
        assert abs(by_key[("ZDT1", "igd")] - 0.02) < 1e-12
        assert by_key[("ZDT2", "hv")] == 0.4


class TestWriteSummary:
    def test_layout_and_empty_cells(self, tmp_path):
        summary = summarize_rows(
            [{"problem": "P", "algorithm": "A", "hv": 0.5}]
        )
        summary.extend(published_summary_entries(["ZDT1"]))
        path = write_summary(summary, tmp_path / "summary.csv")
        rows = _read_csv(path)
        assert rows[0] == [
            "problem",
            "algorithm",
            "indicator",
            "count",
            "mean",
            "std",
            "source",
        ]
        assert rows[1] == ["P", "A", "hv", "1", "0.5", "", "measured"]
        assert rows[2][:3] == ["ZDT1", "IBEA", "hv"]
        assert rows[2][3] == "" and rows[2][6] == "published"


class TestPublished:
    def test_full_table_present(self):
        rows = published_indicators()
        assert len(rows) == 28 * 2 * 3
        problems = {r["problem"] for r in rows}
        assert problems == set(problem_names())
        assert {r["algorithm"] for r in rows} == {"IBEA", "MOEA/D"}
        assert all(r["value"] > 0 for r in rows)

    def test_spot_values(self):
        rows = {
            (r["algorithm"], r["problem"], r["indicator"]): r["value"]
            for r in published_indicators()
        }
        assert rows[("IBEA", "ZDT1", "hv")] == 0.661
        assert rows[("MOEA/D", "ZDT1", "igd")] == 5.31e-4
        assert rows[("MOEA/D", "DTLZ6", "spread")] == 1.000
        assert rows[("IBEA", "LZ09_F9", "hv")] == 0.162

    def test_published_for_filters_and_orders(self):
        rows = published_for(["ZDT2", "ZDT1"])
        assert len(rows) == 12
        assert [r["problem"] for r in rows[:6]] == ["ZDT2"] * 6
        assert [r["indicator"] for r in rows[:3]] == ["hv", "igd", "spread"]

    def test_summary_entries_flagged(self):
        entries = published_summary_entries(["ZDT1"])
        assert all(e["source"] == "published" for e in entries)
        assert all(e["count"] is None and e["std"] is None for e in entries)
        assert entries[0]["mean"] == 0.661


class TestBenchmarkCampaign:
    def test_report_files_and_rows(self, tmp_path):
        config = _tiny_config(tmp_path)
        report = run_benchmark_campaign(config)
        assert report["total_runs"] == 2
        assert report["executed_runs"] == 2
        rows = _read_csv(report["runs_csv"])
        assert rows[0] == list(campaign.RUN_FIELDS)
        assert len(rows) == 3
        eid = experiment_id("ZDT1", "MSGW-FLM")
        for rep, row in enumerate(rows[1:]):
            assert row[0] == eid
            assert int(row[3]) == derive_seed(3, eid, rep)
            assert int(row[4]) == 600
        timing_rows = _read_csv(report["timings_csv"])
        assert timing_rows[0] == list(campaign.TIMING_FIELDS)
        assert len(timing_rows) == 3
        assert float(timing_rows[1][4]) > 0
        manifests = sorted((Path(config.out_dir) / "runs").glob("*.json"))
        assert len(manifests) == 2

    def test_single_rep_summary_equals_run(self, tmp_path):
        config = _tiny_config(tmp_path, repetitions=1)
        report = run_benchmark_campaign(config)
        run_rows = _read_csv(report["runs_csv"])
        summary_rows = _read_csv(report["summary_csv"])
        by_indicator = {row[2]: row for row in summary_rows[1:]}
        header = run_rows[0]
        for name in ("hv", "igd", "spread", "gd"):
            run_value = run_rows[1][header.index(name)]
            assert by_indicator[name][4] == run_value
            assert by_indicator[name][3] == "1"
            assert by_indicator[name][5] == ""

    def test_rerun_is_byte_identical_and_cached(self, tmp_path):
        config = _tiny_config(tmp_path)
        first = run_benchmark_campaign(config)
        runs_bytes = Path(first["runs_csv"]).read_bytes()
        summary_bytes = Path(first["summary_csv"]).read_bytes()
        second = run_benchmark_campaign(config)
        assert second["executed_runs"] == 0
        assert Path(second["runs_csv"]).read_bytes() == runs_bytes
        assert Path(second["summary_csv"]).read_bytes() == summary_bytes

    def test_resumes_after_missing_manifest(self, tmp_path):
        config = _tiny_config(tmp_path)
        first = run_benchmark_campaign(config)
        runs_bytes = Path(first["runs_csv"]).read_bytes()
        (Path(config.out_dir) / "runs" / "ZDT1__MSGW-FLM__r0001.json").unlink()
        second = run_benchmark_campaign(config)
        assert second["executed_runs"] == 1
        assert Path(second["runs_csv"]).read_bytes() == runs_bytes

    def test_changed_seed_invalidates_manifests(self, tmp_path):
        config = _tiny_config(tmp_path)
        run_benchmark_campaign(config)
        changed = _tiny_config(tmp_path, base_seed=4)
        report = run_benchmark_campaign(changed)
        assert report["executed_runs"] == 2

    def test_manifest_matches_direct_run(self, tmp_path):
        config = _tiny_config(tmp_path, repetitions=1)
        run_benchmark_campaign(config)
        manifest = json.loads(
            (Path(config.out_dir) / "runs" / "ZDT1__MSGW-FLM__r0000.json").read_text()
        )
        from greyleap.problems import get_problem

        record = run(
            get_problem("ZDT1"),
            AlgorithmParams(**_TINY_OPTIMIZER),
            seed=manifest["seed"],
        )
        assert record.evals_used == manifest["evals_used"]
        settings = IndicatorSettings(reference=reference_front("ZDT1"))
        F = np.asarray(record.archive_objectives)
        assert manifest["hv"] == float(settings.hypervolume_of(F))
        assert manifest["igd"] == float(settings.igd_of(F))

    def test_hv_mode_changes_values(self, tmp_path):
        # enough budget that the archive reaches the dominated region of
        # the reference point, so both conventions yield nonzero volumes
        params = {"MSGW-FLM": dict(_TINY_OPTIMIZER, max_fitness_evals=3000)}
        raw = run_benchmark_campaign(
            _tiny_config(
                tmp_path,
                repetitions=1,
                out_dir=str(tmp_path / "raw"),
                algorithm_params=params,
            )
        )
        norm = run_benchmark_campaign(
            _tiny_config(
                tmp_path,
                repetitions=1,
                out_dir=str(tmp_path / "norm"),
                hv_mode="normalized",
                algorithm_params=params,
            )
        )
        raw_hv = float(_read_csv(raw["runs_csv"])[1][5])
        norm_hv = float(_read_csv(norm["runs_csv"])[1][5])
        assert raw_hv > 0.0
        assert raw_hv != norm_hv

    def test_include_published_appends_rows(self, tmp_path):
        config = _tiny_config(tmp_path, repetitions=1, include_published=True)
        report = run_benchmark_campaign(config)
        rows = _read_csv(report["summary_csv"])
        sources = {row[6] for row in rows[1:]}
        assert sources == {"measured", "published"}
        published = [row for row in rows[1:] if row[6] == "published"]
        assert len(published) == 6

    def test_invalid_config_writes_nothing(self, tmp_path):
        config = _tiny_config(tmp_path, problems=("NOPE",))
        with pytest.raises(ConfigError):
            run_benchmark_campaign(config)
        assert not (tmp_path / "out").exists()

    def test_parallel_matches_serial(self, tmp_path):
        serial = run_benchmark_campaign(
            _tiny_config(tmp_path, out_dir=str(tmp_path / "serial"))
        )
        parallel = run_benchmark_campaign(
            _tiny_config(tmp_path, out_dir=str(tmp_path / "parallel"), parallel=2)
        )
        assert (
            Path(serial["runs_csv"]).read_bytes()
            == Path(parallel["runs_csv"]).read_bytes()
        )


def _tiny_alloc(tmp_path, **overrides):
    settings = dict(
        configurations=((2, 2),),
        cycles=2,
        seeds=2,
        base_seed=1,
        horizon=2,
        out_dir=str(tmp_path / "alloc"),
        optimizer=dict(_TINY_OPTIMIZER, max_fitness_evals=400),
    )
    settings.update(overrides)
    return AllocationConfig(**settings)


class TestAllocationCampaign:
    def test_trace_file_layout(self, tmp_path):
        config = _tiny_alloc(tmp_path)
        report = run_allocation_campaign(config)
        (path,) = report["trace_files"]
        assert path.name == "alloc_2x2.csv"
        rows = _read_csv(path)
        assert rows[0] == [
            "seed_index",
            "seed",
            "loss_cycle_1",
            "loss_cycle_2",
            "zero_attained_cycle",
        ]
        assert len(rows) == 4
        assert rows[3][0] == "mean" and rows[3][1] == ""
        for t in (2, 3):
            expected = (float(rows[1][t]) + float(rows[2][t])) / 2.0
            assert abs(float(rows[3][t]) - expected) < 1e-12

    def test_single_seed_mean_equals_trace(self, tmp_path):
        config = _tiny_alloc(tmp_path, seeds=1)
        report = run_allocation_campaign(config)
        rows = _read_csv(report["trace_files"][0])
        assert rows[2][0] == "mean"
        assert [float(v) for v in rows[2][2:4]] == [float(v) for v in rows[1][2:4]]

    def test_zero_supply_strictly_increases(self, tmp_path):
        config = _tiny_alloc(tmp_path, supply_scale=0.0, cycles=3)
        report = run_allocation_campaign(config)
        rows = _read_csv(report["trace_files"][0])
        mean = [float(v) for v in rows[-1][2:5]]
        assert mean[0] < mean[1] < mean[2]

    def test_rerun_is_byte_identical(self, tmp_path):
        config = _tiny_alloc(tmp_path)
        first = Path(run_allocation_campaign(config)["trace_files"][0]).read_bytes()
        second = Path(run_allocation_campaign(config)["trace_files"][0]).read_bytes()
        assert first == second

    def test_multiple_configurations(self, tmp_path):
        config = _tiny_alloc(
            tmp_path, configurations=((2, 2), (2, 3)), seeds=1, cycles=1
        )
        report = run_allocation_campaign(config)
        names = [p.name for p in report["trace_files"]]
        assert names == ["alloc_2x2.csv", "alloc_2x3.csv"]

    def test_from_mapping_ranges_section(self):
        config = AllocationConfig.from_mapping(
            {
                "configurations": [[2, 2]],
                "ranges": {"initial_deficit": [20, 50]},
            }
        )
        assert config.initial_deficit_range == (20.0, 50.0)
        assert config.demand_range == (20.0, 60.0)

    def test_from_mapping_unknown_keys(self):
        with pytest.raises(ConfigError, match="unknown ranges key"):
            AllocationConfig.from_mapping({"ranges": {"budget": [0, 1]}})
        with pytest.raises(ConfigError, match="unknown config key"):
            AllocationConfig.from_mapping({"sites": 5})

    @pytest.mark.parametrize(
        "overrides",
        [
            {"configurations": ()},
            {"configurations": ((0, 2),)},
            {"cycles": 0},
            {"seeds": 0},
            {"horizon": 0},
            {"demand_range": (5.0, 2.0)},
            {"penalty_weight": -1.0},
            {"supply_scale": -0.5},
            {"optimizer": {"population_size": -1}},
        ],
    )
    def test_invalid_settings(self, overrides):
        settings = dict(configurations=((2, 2),))
        settings.update(overrides)
        with pytest.raises(ConfigError):
            AllocationConfig(**settings).validate()


class TestCli:
    def _write_bench_config(self, tmp_path, **extra):
        lines = [
            "problems: [ZDT1]",
            "repetitions: 1",
            "base_seed: 3",
            f"out_dir: {tmp_path / 'out'}",
            "algorithm_params:",
            "  MSGW-FLM:",
            "    population_size: 20",
            "    memeplex_count: 5",
            "    archive_max: 20",
            "    max_fitness_evals: 600",
        ]
        for key, value in extra.items():
            lines.append(f"{key}: {value}")
        path = tmp_path / "bench.yaml"
        path.write_text("\n".join(lines) + "\n")
        return path

    def test_bench_run_and_summarize(self, tmp_path, capsys):
        config = self._write_bench_config(tmp_path)
        assert main(["bench", "run", "--config", str(config)]) == 0
        out = capsys.readouterr().out
        assert "runs.csv" in out and "summary.csv" in out
        runs_csv = tmp_path / "out" / "runs.csv"
        assert runs_csv.is_file()
        assert (
            main(
                [
                    "bench",
                    "summarize",
                    str(runs_csv),
                    "--published",
                    "--out",
                    str(tmp_path / "sum"),
                ]
            )
            == 0
        )
        out = capsys.readouterr().out
        assert "published" in out
        assert (tmp_path / "sum" / "summary.csv").is_file()

    def test_bench_run_flag_overrides(self, tmp_path):
        config = self._write_bench_config(tmp_path)
        assert (
            main(
                [
                    "bench",
                    "run",
                    "--config",
                    str(config),
                    "--reps",
                    "2",
                    "--seed",
                    "9",
                    "--out",
                    str(tmp_path / "other"),
                    "--hv-ref",
                    "normalized",
                ]
            )
            == 0
        )
        rows = _read_csv(tmp_path / "other" / "runs.csv")
        assert len(rows) == 3
        eid = experiment_id("ZDT1", "MSGW-FLM")
        assert int(rows[1][3]) == derive_seed(9, eid, 0)

    def test_missing_config_flag_is_config_error(self, capsys):
        assert main(["bench", "run"]) == 1
        assert "error:" in capsys.readouterr().err

    def test_missing_config_file(self, tmp_path, capsys):
        assert main(["bench", "run", "--config", str(tmp_path / "no.yaml")]) == 1
        assert "not found" in capsys.readouterr().err

    def test_unknown_problem_exit_code(self, tmp_path, capsys):
        path = tmp_path / "bad.yaml"
        path.write_text("problems: [NOPE]\n")
        assert main(["bench", "run", "--config", str(path)]) == 1
        assert "valid ids" in capsys.readouterr().err

    def test_unknown_verb(self, capsys):
        assert main(["polish"]) == 1
        capsys.readouterr()

    def test_summarize_missing_file(self, tmp_path, capsys):
        assert main(["bench", "summarize", str(tmp_path / "no.csv")]) == 1
        capsys.readouterr()

    def test_summarize_malformed_is_runtime_failure(self, tmp_path, capsys):
        path = tmp_path / "runs.csv"
        path.write_text("problem,algorithm,hv\nZDT1,A,oops\n")
        assert main(["bench", "summarize", str(path)]) == 2
        err = capsys.readouterr().err
        assert "line 2" in err

    def test_alloc_run_defaults_overridden(self, tmp_path, capsys):
        lines = [
            "configurations: [[2, 2]]",
            "cycles: 2",
            "seeds: 2",
            f"out_dir: {tmp_path / 'alloc'}",
            "optimizer:",
            "  population_size: 20",
            "  memeplex_count: 5",
            "  archive_max: 20",
            "  max_fitness_evals: 400",
        ]
        config = tmp_path / "alloc.yaml"
        config.write_text("\n".join(lines) + "\n")
        assert main(["alloc", "run", "--config", str(config), "--reps", "1"]) == 0
        capsys.readouterr()
        rows = _read_csv(tmp_path / "alloc" / "alloc_2x2.csv")
        assert len(rows) == 3

    def test_fronts_generate(self, tmp_path, capsys):
        assert main(["fronts", "generate", "--out", str(tmp_path / "fronts")]) == 0
        capsys.readouterr()
        assert len(list((tmp_path / "fronts").glob("*.txt"))) == 17
