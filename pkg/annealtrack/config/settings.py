#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
annealtrack 기본 설정 파일
AnnealTrack Configuration File

이 파일의 값들을 수정하여 시나리오, 샘플러, 시뮬레이터의 기본 동작을 조절할 수 있습니다.
시나리오 파일(JSON 또는 YAML)은 load_scenario()로 읽습니다.
"""

from pathlib import Path
from typing import Any, Dict, List, Union

import yaml
from loguru import logger

from ..errors import ArgumentError
from ..tracking.tracking_model import ScenarioParams
from ..utils.parallel import THREADS_ENV, thread_limit

# ==================== 시나리오 설정 ====================

SCENARIO_DEFAULTS = {
    "n_targets": 3,  # 표적 수
    "dt": 1.0,  # 스캔 간격 (초)
    "sigma_p2": 1.0,  # 프로세스 잡음 세기
    "sigma_m2": 0.1,  # 측정 분산 (m²)
    "p_d": 0.95,  # 검출 확률
    "lambda": 1.0,  # 스캔당 평균 클러터 수
    "fov": [0.0, 100.0],  # 시야 구간 (m)
    "seed": 0,
    "deterministic_truth": True,  # 실제 궤적을 잡음 없이 전파
    "initial_cov": [[0.1, 0.0], [0.0, 0.1]],  # P_{0|0}
}

# ==================== 샘플러 설정 ====================

SAMPLER_DEFAULTS = {
    "backend": "sa",
    "n_s": 1000,  # 런당 샷 수
    "t_f_us": 100.0,  # 어닐링 시간 (μs)
    "sweeps_per_us": 1.0,  # sa 백엔드 스윕 환산
    "t_cold": 0.01,  # sa 최종 온도
    "runs": 1,
}

# ==================== MTDA 설정 ====================

MTDA_DEFAULTS = {
    "c": 10.0,  # 이차 제약 페널티
    "c_tilde": 1.0,  # 선형 제약 페널티
    "top_k": 64,  # 사후확률에 쓰는 저에너지 상태 수
}

# ==================== 단열 시뮬레이션 설정 ====================

ADIABATIC_DEFAULTS = {
    "n_records": 101,  # 궤적 기록 점 수
    "levels": 4,  # 추적할 순간 고유상태 수
    "max_phase_per_step": 1.0,  # 스텝당 최대 위상 (rad)
    "sweep_log10_t_f": (-1.0, 3.0, 8),  # t_f 스윕: 10^-1 ~ 10^3, 로그 간격 8점
}

# ==================== 가드 설정 ====================

GUARD_LIMITS = {
    "max_brute_force_sites": 24,
    "max_exhaustive_sites": 20,
    "max_qubits": 12,
    "max_shots": 10_000,
    "max_reference_size": 4,
}

SCENARIO_KEYS = set(SCENARIO_DEFAULTS) | {"scans"}


# ==================== 시나리오 파일 ====================


def scenario_from_dict(payload: Dict[str, Any]) -> ScenarioParams:
    unknown = set(payload) - SCENARIO_KEYS
    if unknown:
        raise ArgumentError(f"알 수 없는 시나리오 키: {sorted(unknown)}")
    merged = {**SCENARIO_DEFAULTS, **payload}
    fixed = {}
    for entry in merged.get("scans") or []:
        try:
            k, values = entry
            fixed[int(k)] = tuple(float(y) for y in values)
        except (TypeError, ValueError) as exc:
            raise ArgumentError(f"scans 항목 형식 오류 ([k, [y...]]): {entry!r}") from exc
    try:
        cov = tuple(tuple(float(v) for v in row) for row in merged["initial_cov"])
        return ScenarioParams(
            n_targets=int(merged["n_targets"]),
            dt=float(merged["dt"]),
            sigma_p2=float(merged["sigma_p2"]),
            sigma_m2=float(merged["sigma_m2"]),
            p_d=float(merged["p_d"]),
            clutter_rate=float(merged["lambda"]),
            fov=tuple(float(v) for v in merged["fov"]),
            seed=int(merged["seed"]),
            deterministic_truth=bool(merged["deterministic_truth"]),
            initial_cov=cov,
            fixed_scans=fixed,
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ArgumentError):
            raise
        raise ArgumentError(f"시나리오 값 형식 오류: {exc}") from exc


def load_scenario(path: Union[str, Path]) -> ScenarioParams:
    """JSON 또는 YAML 시나리오 파일 읽기 (yaml.safe_load는 JSON도 읽음)"""
    source = Path(path)
    if not source.is_file():
        raise ArgumentError(f"시나리오 파일이 없습니다: {source}")
    with open(source, "r", encoding="utf-8") as handle:
        payload = yaml.safe_load(handle) or {}
    if not isinstance(payload, dict):
        raise ArgumentError(f"시나리오 파일 최상위는 객체여야 합니다: {source}")
    logger.debug(f"시나리오 읽음: {source}")
    return scenario_from_dict(payload)


def scenario_to_dict(p: ScenarioParams) -> Dict[str, Any]:
    payload = {
        "n_targets": p.n_targets,
        "dt": p.dt,
        "sigma_p2": p.sigma_p2,
        "sigma_m2": p.sigma_m2,
        "p_d": p.p_d,
        "lambda": p.clutter_rate,
        "fov": list(p.fov),
        "seed": p.seed,
        "deterministic_truth": p.deterministic_truth,
        "initial_cov": [list(row) for row in p.initial_cov],
    }
    if p.fixed_scans:
        payload["scans"] = [[k, list(v)] for k, v in sorted(p.fixed_scans.items())]
    return payload


# ==================== 설정 검증 함수 ====================


def validate_config() -> List[str]:
    """설정값 유효성 검사"""
    errors = []

    if not (0.0 < SCENARIO_DEFAULTS["p_d"] < 1.0):
        errors.append(f"p_d ({SCENARIO_DEFAULTS['p_d']})는 0과 1 사이여야 합니다.")
    if SCENARIO_DEFAULTS["lambda"] <= 0.0:
        errors.append(f"lambda ({SCENARIO_DEFAULTS['lambda']})는 양수여야 합니다.")
    if SCENARIO_DEFAULTS["sigma_m2"] <= 0.0:
        errors.append(f"sigma_m2 ({SCENARIO_DEFAULTS['sigma_m2']})는 양수여야 합니다.")

    if not (1 <= SAMPLER_DEFAULTS["n_s"] <= GUARD_LIMITS["max_shots"]):
        errors.append(f"n_s ({SAMPLER_DEFAULTS['n_s']})는 1-{GUARD_LIMITS['max_shots']} 범위여야 합니다.")
    if SAMPLER_DEFAULTS["backend"] not in ("exact", "sa", "adiabatic", "exhaustive"):
        errors.append(f"backend ({SAMPLER_DEFAULTS['backend']})를 알 수 없습니다.")

    if MTDA_DEFAULTS["c"] <= 0.0 or MTDA_DEFAULTS["c_tilde"] < 0.0:
        errors.append("c는 양수, c_tilde는 0 이상이어야 합니다.")
    if MTDA_DEFAULTS["top_k"] < 1:
        errors.append(f"top_k ({MTDA_DEFAULTS['top_k']})는 1 이상이어야 합니다.")

    if ADIABATIC_DEFAULTS["max_phase_per_step"] <= 0.0:
        errors.append("max_phase_per_step는 양수여야 합니다.")

    return errors


def print_config():
    """현재 설정 출력"""
    print("\n" + "=" * 60)
    print("🧲 annealtrack 설정")
    print("=" * 60)
    print(f"표적 수: {SCENARIO_DEFAULTS['n_targets']}, 스캔 간격: {SCENARIO_DEFAULTS['dt']}초")
    print(f"검출 확률: {SCENARIO_DEFAULTS['p_d']}, 클러터 평균: {SCENARIO_DEFAULTS['lambda']}")
    print(f"시야: {SCENARIO_DEFAULTS['fov'][0]} ~ {SCENARIO_DEFAULTS['fov'][1]} m")
    print(f"샘플러: {SAMPLER_DEFAULTS['backend']} / 샷 {SAMPLER_DEFAULTS['n_s']} / t_f {SAMPLER_DEFAULTS['t_f_us']}μs")
    print(f"MTDA 페널티: c={MTDA_DEFAULTS['c']}, c̃={MTDA_DEFAULTS['c_tilde']}, top_k={MTDA_DEFAULTS['top_k']}")
    print(f"워커 스레드: {thread_limit()} ({THREADS_ENV} 환경 변수로 제한)")
    print("=" * 60)

    errors = validate_config()
    if errors:
        print("⚠️ 설정 오류:")
        for error in errors:
            print(f"  - {error}")
    else:
        print("✅ 모든 설정이 유효합니다.")
    print()


if __name__ == "__main__":
    print_config()
