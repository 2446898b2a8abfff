#!/usr/bin/env python3
# 파일명: test_cli.py
# 설명: 명령줄 하위 명령 (build / sample / track / spectrum / sweep / gumbel) 테스트
# 작성일: 2024

import csv
import json

import numpy as np
import pytest
import yaml

from annealtrack.cli import main
from annealtrack.core.qubo_core import IsingModel, Qubo, dumps_problem


def read_rows(path):
    with open(path, "r", encoding="utf-8", newline="") as handle:
        return list(csv.reader(handle))


def build_krooks(out, k=3):
    assert main(["build", "krooks", "--k", str(k), "--out", str(out)]) == 0
    return out / "problem_krooks.json"


def write_glass(path, n=8, seed=1):
    """무작위 결합 Ising 모델 (런 최솟값이 퍼지도록)"""
    gen = np.random.default_rng(seed)
    coupling = gen.normal(size=(n, n))
    path.write_text(dumps_problem(IsingModel(0.5 * (coupling + coupling.T), gen.normal(size=n))), encoding="utf-8")
    return path


@pytest.fixture
def scenario_file(tmp_path):
    path = tmp_path / "scenario.yaml"
    payload = {"n_targets": 2, "lambda": 0.5, "seed": 4, "scans": [[2, [5.1, 0.2, 40.0]]]}
    path.write_text(yaml.safe_dump(payload), encoding="utf-8")
    return path


# =============================================================================
# build
# =============================================================================


def test_build_krooks_writes_problem(tmp_path):
    problem = build_krooks(tmp_path)
    payload = json.loads(problem.read_text(encoding="utf-8"))
    assert payload["kind"] == "ising"
    assert payload["n"] == 9
    assert payload["labels"]["order"] == "column-major"


def test_build_biased_krooks(tmp_path):
    assert main(["build", "biased-krooks", "--k", "4", "--gamma0", "6", "--m", "2", "--out", str(tmp_path)]) == 0
    payload = json.loads((tmp_path / "problem_biased_krooks.json").read_text(encoding="utf-8"))
    assert payload["n"] == 16


def test_build_mtda_from_scenario(tmp_path, scenario_file):
    out = tmp_path / "out"
    assert main(["build", "mtda", "--scenario", str(scenario_file), "--scan", "2", "--out", str(out)]) == 0
    payload = json.loads((out / "problem_mtda.json").read_text(encoding="utf-8"))
    assert payload["labels"]["measurements"] == [5.1, 0.2, 40.0]
    assert payload["n"] == 3 * 4
    rows = read_rows(out / "cost_scan_002.csv")
    assert rows[0] == ["i\\j", "0", "1", "2", "3"]
    assert len(rows) == 4


def test_build_mtda_requires_scenario(tmp_path):
    assert main(["build", "mtda", "--out", str(tmp_path)]) == 2


def test_build_mtda_with_unknown_scenario_key(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("n_targetz: 2\n", encoding="utf-8")
    assert main(["build", "mtda", "--scenario", str(path), "--out", str(tmp_path)]) == 2


def test_unknown_problem_kind_is_usage_error(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["build", "maxcut", "--out", str(tmp_path)])
    assert info.value.code == 2


# =============================================================================
# sample
# =============================================================================


def test_sample_exact_writes_run_files(tmp_path):
    problem = build_krooks(tmp_path)
    out = tmp_path / "runs"
    code = main(["sample", "--problem", str(problem), "--backend", "exact", "--shots", "50", "--runs", "2", "--out", str(out)])
    assert code == 0
    run0 = json.loads((out / "run_000.json").read_text(encoding="utf-8"))
    assert run0["backend"] == "exact" and run0["n_s"] == 50
    assert (out / "run_001_histogram.csv").is_file()
    sweep = read_rows(out / "anneal_sweep.csv")
    assert sweep[0] == ["t_f_us", "run", "seed", "e_hat0", "e_reference", "ground_fraction"]
    assert [row[2] for row in sweep[1:]] == ["0", "1"]
    assert all(float(row[5]) == 1.0 for row in sweep[1:])


def test_sample_several_anneal_times(tmp_path):
    problem = build_krooks(tmp_path, k=2)
    out = tmp_path / "runs"
    code = main(["sample", "--problem", str(problem), "--shots", "20", "--anneal-time-us", "5", "20", "--out", str(out)])
    assert code == 0
    assert (out / "run_t00_000.json").is_file() and (out / "run_t01_000.json").is_file()
    assert len(read_rows(out / "anneal_sweep.csv")) == 3


def test_sample_is_deterministic(tmp_path):
    problem = build_krooks(tmp_path)
    for name in ("a", "b"):
        args = ["sample", "--problem", str(problem), "--shots", "100", "--seed", "9", "--out", str(tmp_path / name)]
        assert main(args) == 0
    for filename in ("run_000.json", "run_000_histogram.csv", "anneal_sweep.csv"):
        assert (tmp_path / "a" / filename).read_bytes() == (tmp_path / "b" / filename).read_bytes()


def test_sample_accepts_qubo_problem(tmp_path):
    path = tmp_path / "qubo.json"
    path.write_text(dumps_problem(Qubo(np.diag([1.0, -1.0, 0.5]))), encoding="utf-8")
    assert main(["sample", "--problem", str(path), "--backend", "exact", "--shots", "3", "--out", str(tmp_path)]) == 0
    run0 = json.loads((tmp_path / "run_000.json").read_text(encoding="utf-8"))
    assert {shot["state"] for shot in run0["shots"]} == {"010"}


def test_sample_missing_problem_file(tmp_path):
    assert main(["sample", "--problem", str(tmp_path / "none.json"), "--out", str(tmp_path)]) == 2


def test_sample_too_many_shots(tmp_path):
    problem = build_krooks(tmp_path, k=2)
    assert main(["sample", "--problem", str(problem), "--shots", "10001", "--out", str(tmp_path)]) == 2


def test_sample_exact_refuses_large_problem(tmp_path):
    problem = build_krooks(tmp_path, k=5)
    assert main(["sample", "--problem", str(problem), "--backend", "exact", "--shots", "5", "--out", str(tmp_path)]) == 3


# =============================================================================
# track
# =============================================================================


def test_track_writes_jsonl_and_costs(tmp_path, scenario_file):
    out = tmp_path / "track"
    code = main([
        "track", "--scenario", str(scenario_file), "--scans", "3", "--backend", "exact",
        "--shots", "10", "--c", "10", "--ctilde", "10", "--out", str(out),
    ])
    assert code == 0
    lines = (out / "track.jsonl").read_text(encoding="utf-8").splitlines()
    assert len(lines) == 3
    records = [json.loads(line) for line in lines]
    assert [r["k"] for r in records] == [1, 2, 3]
    assert all(len(r["updated"]) == 2 for r in records)
    for k in (1, 2, 3):
        assert (out / f"cost_scan_{k:03d}.csv").is_file()


def test_track_requires_existing_scenario(tmp_path):
    assert main(["track", "--scenario", str(tmp_path / "none.yaml"), "--out", str(tmp_path)]) == 2


# =============================================================================
# spectrum / sweep
# =============================================================================


def test_spectrum_csv(tmp_path):
    problem = build_krooks(tmp_path, k=2)
    assert main(["spectrum", "--problem", str(problem), "--points", "11", "--out", str(tmp_path)]) == 0
    rows = read_rows(tmp_path / "spectrum.csv")
    assert rows[0] == ["s", "E_0", "E_1", "E_2", "E_3", "gap"]
    assert len(rows) == 12
    assert float(rows[1][1]) == pytest.approx(-4.0)


def test_spectrum_with_trajectory(tmp_path):
    problem = build_krooks(tmp_path, k=2)
    code = main([
        "spectrum", "--problem", str(problem), "--points", "6", "--trajectory",
        "--anneal-time-us", "1", "--out", str(tmp_path),
    ])
    assert code == 0
    rows = read_rows(tmp_path / "trajectory.csv")
    assert rows[0][:2] == ["s", "E_0"]
    assert len(rows) == 7


def test_sweep_on_nondegenerate_problem(tmp_path):
    path = tmp_path / "field.json"
    path.write_text(dumps_problem(IsingModel(np.zeros((2, 2)), np.array([1.0, 0.5]))), encoding="utf-8")
    code = main(["sweep", "--problem", str(path), "--anneal-time-us", "1", "10", "--points", "11", "--out", str(tmp_path)])
    assert code == 0
    rows = read_rows(tmp_path / "sweep.csv")
    assert rows[0] == ["t_f", "final_ground_occupation", "adiabatic_metric"]
    assert float(rows[2][2]) == pytest.approx(float(rows[1][2]) / 10.0)


def test_sweep_on_degenerate_problem_is_accuracy_failure(tmp_path):
    problem = build_krooks(tmp_path, k=2)
    assert main(["sweep", "--problem", str(problem), "--anneal-time-us", "1", "--out", str(tmp_path)]) == 4


# =============================================================================
# 결정성
# =============================================================================


def output_bytes(directory):
    return {p.name: p.read_bytes() for p in sorted(directory.iterdir()) if p.is_file()}


@pytest.mark.parametrize("command", ["build-mtda", "track", "spectrum", "sweep", "gumbel"])
def test_same_seed_gives_identical_files(tmp_path, scenario_file, command):
    krooks = build_krooks(tmp_path / "input", k=2)
    field = tmp_path / "input" / "field.json"
    field.write_text(dumps_problem(IsingModel(np.zeros((2, 2)), np.array([1.0, 0.5]))), encoding="utf-8")
    glass = write_glass(tmp_path / "input" / "glass.json")
    argv = {
        "build-mtda": ["build", "mtda", "--scenario", str(scenario_file), "--scan", "2"],
        "track": ["track", "--scenario", str(scenario_file), "--scans", "3", "--shots", "50", "--c", "10", "--ctilde", "10"],
        "spectrum": ["spectrum", "--problem", str(krooks), "--points", "11", "--trajectory", "--anneal-time-us", "1"],
        "sweep": ["sweep", "--problem", str(field), "--anneal-time-us", "1", "10", "--points", "11"],
        "gumbel": ["gumbel", "--problem", str(glass), "--runs", "30", "--shots", "1", "--anneal-time-us", "1"],
    }[command]
    for name in ("a", "b"):
        assert main(argv + ["--seed", "5", "--out", str(tmp_path / name)]) == 0
    first, second = output_bytes(tmp_path / "a"), output_bytes(tmp_path / "b")
    assert first and first == second


# =============================================================================
# gumbel
# =============================================================================


def test_gumbel_from_minima_file(tmp_path):
    draws = np.random.default_rng(0).gumbel(size=200)
    path = tmp_path / "minima.csv"
    path.write_text("run,e_hat0\n" + "".join(f"{i},{float(-x)!r}\n" for i, x in enumerate(draws)), encoding="utf-8")
    assert main(["gumbel", "--minima", str(path), "--out", str(tmp_path / "fit")]) == 0
    report = json.loads((tmp_path / "fit" / "gumbel_fit.json").read_text(encoding="utf-8"))
    assert set(report) == {"alpha", "beta", "n_samples", "loglik"}
    assert report["n_samples"] == 200


def test_gumbel_from_sampled_runs(tmp_path):
    path = write_glass(tmp_path / "glass.json")
    code = main([
        "gumbel", "--problem", str(path), "--runs", "40", "--shots", "1",
        "--anneal-time-us", "1", "--out", str(tmp_path),
    ])
    assert code == 0
    assert len(read_rows(tmp_path / "minima.csv")) == 41


def test_gumbel_with_identical_minima_is_rejected(tmp_path):
    problem = build_krooks(tmp_path, k=2)
    code = main(["gumbel", "--problem", str(problem), "--backend", "exact", "--runs", "12", "--shots", "2", "--out", str(tmp_path)])
    assert code == 3


def test_gumbel_minima_without_column(tmp_path):
    path = tmp_path / "other.csv"
    path.write_text("run,energy\n0,1.0\n", encoding="utf-8")
    assert main(["gumbel", "--minima", str(path), "--out", str(tmp_path)]) == 2


def test_gumbel_needs_a_source(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["gumbel", "--out", str(tmp_path)])
    assert info.value.code == 2
