#!/usr/bin/env python3
# 파일명: cli.py
# 설명: annealtrack 명령줄 인터페이스 (build / sample / track / spectrum / sweep / gumbel)
# 작성일: 2024
"""
annealtrack 명령줄 프로그램

사용 예:
    python3 main.py build krooks --k 3 --out out/
    python3 main.py build mtda --scenario s.yaml --scan 3 --c 10 --ctilde 1 --out out/
    python3 main.py sample --problem out/problem_krooks.json --backend sa --shots 1000 --out out/
    python3 main.py track --scenario s.yaml --scans 5 --backend exact --out out/
    python3 main.py spectrum --problem p.json --out out/
    python3 main.py sweep --problem p.json --out out/
    python3 main.py gumbel --problem p.json --runs 500 --shots 500 --out out/

종료 코드: 0 성공, 2 사용법 오류, 3 가드/크기 제한, 4 수치 정확도 문제
"""

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

import numpy as np
from loguru import logger

from .config.settings import (
    ADIABATIC_DEFAULTS,
    MTDA_DEFAULTS,
    SAMPLER_DEFAULTS,
    GUARD_LIMITS,
    load_scenario,
)
from .controllers.tracking_controller import TrackingController
from .core.qubo_core import IsingModel, Qubo, brute_force_solve, dumps_problem, ising_to_qubo, problem_from_dict, qubo_to_ising
from .errors import AnnealTrackError, ArgumentError
from .problems.problem_builders import ProblemLabels, biased_krooks_ising, krooks_ising, mtda_ising, mtda_labels
from .solvers.adiabatic_sim import (
    build_pair,
    evolve,
    spectrum,
    sweep_anneal_times,
    trajectory_header,
    trajectory_rows,
)
from .solvers.samplers import AnnealParams, Backend, density_of_states, ground_state_fraction, run, run_to_dict
from .stats.extreme_stats import fit_gumbel_mle, fit_report, run_minima
from .tracking.assoc_cost import build_cost_matrix
from .tracking.tracking_model import scenario_predictions, simulate_scenario
from .utils.file_io import atomic_write_text, read_csv_column, read_json, write_csv, write_json, write_jsonl
from .utils.logging_setup import setup_logging

GUMBEL_DEFAULT_RUNS = 500
GUMBEL_DEFAULT_SHOTS = 500


# =============================================================================
# 인자 파서
# =============================================================================


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="난수 시드")
    common.add_argument("--backend", choices=[b.value for b in Backend], default=SAMPLER_DEFAULTS["backend"])
    common.add_argument("--shots", type=int, default=None, help="런당 샷 수")
    common.add_argument("--anneal-time-us", type=float, nargs="+", default=None, help="어닐링 시간 (μs)")
    common.add_argument("--runs", type=int, default=None, help="런 수")
    common.add_argument("--c", type=float, default=MTDA_DEFAULTS["c"], help="이차 제약 페널티")
    common.add_argument("--ctilde", type=float, default=MTDA_DEFAULTS["c_tilde"], help="선형 제약 페널티")
    common.add_argument("--top-k", type=int, default=MTDA_DEFAULTS["top_k"], help="사후확률 상태 수")
    common.add_argument("--out", type=Path, default=Path("out"), help="출력 디렉터리")
    common.add_argument("--log-level", default="WARNING", help="로그 레벨 (DEBUG, INFO, WARNING ...)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="annealtrack", description="양자 어닐링 다중표적 데이터 연관 도구")
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", parents=[common], help="문제 JSON 생성")
    build.add_argument("kind", choices=["krooks", "biased-krooks", "mtda"])
    build.add_argument("--k", type=int, default=3)
    build.add_argument("--gamma0", type=float, default=6.0)
    build.add_argument("--m", type=int, default=1)
    build.add_argument("--scenario", type=Path)
    build.add_argument("--scan", type=int, default=1)

    sample = commands.add_parser("sample", parents=[common], help="런 샘플링")
    sample.add_argument("--problem", type=Path, required=True)

    track = commands.add_parser("track", parents=[common], help="다중 스캔 추적")
    track.add_argument("--scenario", type=Path, required=True)
    track.add_argument("--scans", type=int, default=5)

    spectrum_cmd = commands.add_parser("spectrum", parents=[common], help="H(s) 스펙트럼")
    spectrum_cmd.add_argument("--problem", type=Path, required=True)
    spectrum_cmd.add_argument("--points", type=int, default=101)
    spectrum_cmd.add_argument("--levels", type=int, default=ADIABATIC_DEFAULTS["levels"])
    spectrum_cmd.add_argument("--trajectory", action="store_true", help="첫 어닐링 시간으로 궤적 CSV도 저장")

    sweep = commands.add_parser("sweep", parents=[common], help="어닐링 시간 스윕")
    sweep.add_argument("--problem", type=Path, required=True)
    sweep.add_argument("--points", type=int, default=101, help="단열 지표 s 격자 점 수")

    gumbel = commands.add_parser("gumbel", parents=[common], help="런 최소 에너지 Gumbel 적합")
    source = gumbel.add_mutually_exclusive_group(required=True)
    source.add_argument("--problem", type=Path)
    source.add_argument("--minima", type=Path, help="e_hat0 열이 있는 CSV")
    return parser


# =============================================================================
# 공용 도우미
# =============================================================================


def _load_ising(path: Path) -> IsingModel:
    if not path.is_file():
        raise ArgumentError(f"문제 파일이 없습니다: {path}")
    problem = problem_from_dict(read_json(path))
    return qubo_to_ising(problem) if isinstance(problem, Qubo) else problem


def _anneal_params(args, t_f: Optional[float] = None, seed: Optional[int] = None, shots: Optional[int] = None) -> AnnealParams:
    return AnnealParams(
        n_s=shots or args.shots or SAMPLER_DEFAULTS["n_s"],
        t_f=t_f if t_f is not None else (args.anneal_time_us or [SAMPLER_DEFAULTS["t_f_us"]])[0],
        seed=args.seed if seed is None else seed,
        backend=Backend(args.backend),
        sweeps_per_us=SAMPLER_DEFAULTS["sweeps_per_us"],
        t_cold=SAMPLER_DEFAULTS["t_cold"],
    )


def _reference_energy(model: IsingModel) -> Optional[float]:
    if model.n > GUARD_LIMITS["max_exhaustive_sites"]:
        return None
    e0, _ = brute_force_solve(ising_to_qubo(model))
    return e0


# =============================================================================
# 명령 구현
# =============================================================================


def cmd_build(args) -> int:
    if args.kind == "krooks":
        model, labels = krooks_ising(args.k), ProblemLabels(args.k, args.k).to_dict()
    elif args.kind == "biased-krooks":
        model, labels = biased_krooks_ising(args.k, args.gamma0, args.m), ProblemLabels(args.k, args.k).to_dict()
    else:
        if args.scenario is None:
            raise ArgumentError("build mtda 에는 --scenario 가 필요합니다")
        if args.scan < 1:
            raise ArgumentError(f"--scan 은 1 이상이어야 합니다: {args.scan}")
        scenario = load_scenario(args.scenario)
        history, scans = simulate_scenario(scenario, args.scan)
        scan = scans[-1]
        preds = scenario_predictions(scenario, history[args.scan - 1])
        cost = build_cost_matrix(preds, scan, scenario)
        model = mtda_ising(cost, args.c, args.ctilde)
        labels = mtda_labels(cost.n_targets, cost.n_measurements).to_dict()
        labels["measurements"] = list(scan.measurements)
        write_csv(args.out / f"cost_scan_{scan.k:03d}.csv", cost.csv_header(), cost.to_csv_rows())

    target = args.out / f"problem_{args.kind.replace('-', '_')}.json"
    atomic_write_text(target, dumps_problem(model, labels))
    print(f"✅ 문제 생성: {target} (사이트 {model.n}개)")
    return 0


def cmd_sample(args) -> int:
    model = _load_ising(args.problem)
    anneal_times = args.anneal_time_us or [SAMPLER_DEFAULTS["t_f_us"]]
    runs = args.runs or SAMPLER_DEFAULTS["runs"]
    e_ref = _reference_energy(model)

    results = []
    for t_index, t_f in enumerate(anneal_times):
        for r in range(runs):
            result = run(model, _anneal_params(args, t_f=t_f, seed=args.seed + r))
            stem = f"run_{r:03d}" if len(anneal_times) == 1 else f"run_t{t_index:02d}_{r:03d}"
            write_json(args.out / f"{stem}.json", run_to_dict(result))
            write_csv(args.out / f"{stem}_histogram.csv", ["energy", "fraction"], density_of_states(result))
            results.append((t_f, r, result))

    reference = e_ref if e_ref is not None else min(result.e_hat0 for _, _, result in results)
    rows = [
        [float(t_f), r, result.seed, result.e_hat0, reference, ground_state_fraction(result, reference)]
        for t_f, r, result in results
    ]
    write_csv(
        args.out / "anneal_sweep.csv",
        ["t_f_us", "run", "seed", "e_hat0", "e_reference", "ground_fraction"],
        rows,
    )
    best = min(rows, key=lambda row: row[3])
    print(f"✅ 런 {len(rows)}개 완료 | 최저 Ê0 = {best[3]:.6f} | 기준 E0 = {reference:.6f}")
    for row in rows:
        print(f"  t_f={row[0]:g}μs 런 {row[1]:3d}: Ê0={row[3]:.6f}, 바닥 상태 비율 {row[5] * 100:.1f}%")
    return 0


def cmd_track(args) -> int:
    scenario = load_scenario(args.scenario)
    controller = TrackingController(scenario, _anneal_params(args), args.c, args.ctilde, args.top_k)
    outcomes = controller.run_scenario(args.scans)
    for outcome in outcomes:
        cost = outcome.diagnostics.cost
        write_csv(args.out / f"cost_scan_{outcome.scan.k:03d}.csv", cost.csv_header(), cost.to_csv_rows())
    write_jsonl(args.out / "track.jsonl", controller.records())
    controller.print_status()
    return 0


def cmd_spectrum(args) -> int:
    pair = build_pair(_load_ising(args.problem))
    grid = np.linspace(0.0, 1.0, max(2, args.points))
    trace = spectrum(pair, grid, args.levels)
    levels = trace.energies.shape[1]
    header = ["s"] + [f"E_{l}" for l in range(levels)] + ["gap"]
    rows = [[float(s)] + [float(e) for e in energies] + [float(g)] for s, energies, g in zip(grid, trace.energies, trace.gaps)]
    write_csv(args.out / "spectrum.csv", header, rows)
    print(f"✅ 스펙트럼 저장: 격자 {grid.size}점, 최소 갭 {np.nanmin(trace.gaps):.6f}")

    if args.trajectory:
        t_f = (args.anneal_time_us or [SAMPLER_DEFAULTS["t_f_us"]])[0]
        trajectory = evolve(pair, t_f, n_records=args.points, levels=args.levels)
        write_csv(args.out / "trajectory.csv", trajectory_header(trajectory.energies.shape[1]), trajectory_rows(trajectory))
        print(f"✅ 궤적 저장: t_f={t_f}, 최종 바닥 점유율 {trajectory.final_ground_occupation:.6f}")
    return 0


def cmd_sweep(args) -> int:
    pair = build_pair(_load_ising(args.problem))
    if args.anneal_time_us:
        anneal_times = list(args.anneal_time_us)
    else:
        start, stop, count = ADIABATIC_DEFAULTS["sweep_log10_t_f"]
        anneal_times = list(np.logspace(start, stop, count))
    grid = np.linspace(0.0, 1.0, max(2, args.points))
    rows = sweep_anneal_times(pair, anneal_times, grid)
    write_csv(
        args.out / "sweep.csv",
        ["t_f", "final_ground_occupation", "adiabatic_metric"],
        [[row["t_f"], row["final_ground_occupation"], row["adiabatic_metric"]] for row in rows],
    )
    print("✅ 어닐링 시간 스윕 완료")
    for row in rows:
        print(f"  t_f={row['t_f']:10.4f}: 바닥 점유율 {row['final_ground_occupation']:.6f}, 단열 지표 {row['adiabatic_metric']:.4e}")
    return 0


def cmd_gumbel(args) -> int:
    if args.minima is not None:
        if not args.minima.is_file():
            raise ArgumentError(f"최솟값 파일이 없습니다: {args.minima}")
        try:
            minima = read_csv_column(args.minima, "e_hat0")
        except (KeyError, ValueError) as exc:
            raise ArgumentError(str(exc)) from exc
    else:
        model = _load_ising(args.problem)
        runs = args.runs or GUMBEL_DEFAULT_RUNS
        shots = args.shots or GUMBEL_DEFAULT_SHOTS
        results = [run(model, _anneal_params(args, seed=args.seed + r, shots=shots)) for r in range(runs)]
        minima = run_minima(results)
        write_csv(args.out / "minima.csv", ["run", "e_hat0"], [[r, e] for r, e in enumerate(minima)])

    report = fit_report(minima, fit_gumbel_mle(minima))
    write_json(args.out / "gumbel_fit.json", report)
    print(f"✅ Gumbel 적합: α = {report['alpha']:.4f}, β = {report['beta']:.4f} (표본 {report['n_samples']}개)")
    return 0


COMMANDS = {
    "build": cmd_build,
    "sample": cmd_sample,
    "track": cmd_track,
    "spectrum": cmd_spectrum,
    "sweep": cmd_sweep,
    "gumbel": cmd_gumbel,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except AnnealTrackError as exc:
        logger.error(str(exc))
        print(f"❌ {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
