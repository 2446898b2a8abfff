#!/usr/bin/env python3
# 파일명: tracking_model.py
# 설명: 1차원 등속 표적 운동 모델, 칼만 예측, 측정(검출 + 클러터) 시뮬레이션
# 작성일: 2024
"""
선형-가우시안 표적 시뮬레이션 모듈

- 상태: (위치 m, 속도 m/s)
- 운동 모델: x_k = F x_{k-1} + w,  w ~ N(0, Q_proc)
- 측정 모델: y = H x + v,  H = [1 0],  v ~ N(0, σ_M²)
- 클러터: Poisson(λ) 개, 시야(FoV) 구간 위 균등분포

예측 단계는 filterpy.kalman.predict를 사용합니다.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from filterpy.kalman import predict as kf_predict
from loguru import logger

from ..errors import ArgumentError

PSD_TOL = 1e-12  # 공분산 고유값 허용 음수 한계
MEASUREMENT_H = np.array([[1.0, 0.0]])


# =============================================================================
# 데이터 클래스
# =============================================================================


@dataclass(frozen=True)
class TargetState:
    """표적 상태 추정 (평균, 공분산)"""

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = np.array(self.mean, dtype=float).reshape(-1)
        cov = np.array(self.cov, dtype=float)
        if mean.shape != (2,) or cov.shape != (2, 2):
            raise ArgumentError(f"TargetState 형태 오류: mean {mean.shape}, cov {cov.shape}")
        if not np.allclose(cov, cov.T, rtol=0.0, atol=1e-9):
            raise ArgumentError("공분산 행렬이 대칭이 아닙니다")
        cov = 0.5 * (cov + cov.T)
        if np.linalg.eigvalsh(cov).min() < -PSD_TOL * max(1.0, float(np.abs(cov).max())):
            raise ArgumentError("공분산 행렬이 양의 준정부호가 아닙니다")
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    @property
    def position(self) -> float:
        return float(self.mean[0])

    def to_dict(self) -> Dict[str, list]:
        return {"mean": self.mean.tolist(), "cov": self.cov.tolist()}


@dataclass(frozen=True)
class ScenarioParams:
    """시나리오 파라미터 (기본값은 3표적 기준 시나리오)"""

    n_targets: int = 3
    dt: float = 1.0
    sigma_p2: float = 1.0
    sigma_m2: float = 0.1
    p_d: float = 0.95
    clutter_rate: float = 1.0
    fov: Tuple[float, float] = (0.0, 100.0)
    seed: int = 0
    deterministic_truth: bool = True
    initial_cov: Tuple[Tuple[float, float], Tuple[float, float]] = ((0.1, 0.0), (0.0, 0.1))
    # 시뮬레이션 대신 사용할 측정 목록 {스캔 번호: 측정값들}
    fixed_scans: Dict[int, Tuple[float, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if int(self.n_targets) < 1:
            raise ArgumentError(f"표적 수는 1 이상이어야 합니다: {self.n_targets}")
        if not (0.0 < self.p_d < 1.0):
            raise ArgumentError(f"검출 확률은 0 < p_d < 1 이어야 합니다: {self.p_d}")
        if self.clutter_rate < 0.0:
            raise ArgumentError(f"클러터 평균 λ는 0 이상이어야 합니다: {self.clutter_rate}")
        if self.sigma_m2 <= 0.0:
            raise ArgumentError(f"측정 분산 σ_M²는 양수여야 합니다: {self.sigma_m2}")
        if self.sigma_p2 < 0.0:
            raise ArgumentError(f"프로세스 잡음 σ_p²는 음수일 수 없습니다: {self.sigma_p2}")
        if len(self.fov) != 2 or not (self.fov[1] > self.fov[0]):
            raise ArgumentError(f"시야 구간 길이는 양수여야 합니다: {self.fov}")
        object.__setattr__(self, "n_targets", int(self.n_targets))
        object.__setattr__(self, "fov", (float(self.fov[0]), float(self.fov[1])))

    @property
    def fov_length(self) -> float:
        return self.fov[1] - self.fov[0]

    @property
    def p0(self) -> np.ndarray:
        return np.array(self.initial_cov, dtype=float)


@dataclass(frozen=True)
class Scan:
    """스캔 k의 측정 집합 (순서 무의미)"""

    k: int
    measurements: Tuple[float, ...]
    # 측정별 실제 발생원: 0 = 클러터, i = 표적 i. 진단용이며 필터는 사용하지 않음
    origins: Tuple[int, ...] = ()

    def __post_init__(self):
        values = tuple(float(y) for y in self.measurements)
        object.__setattr__(self, "measurements", values)
        object.__setattr__(self, "origins", tuple(int(o) for o in self.origins))
        if self.origins and len(self.origins) != len(values):
            raise ArgumentError("origins 길이가 측정 개수와 다릅니다")

    @property
    def m(self) -> int:
        return len(self.measurements)

    def time(self, dt: float) -> float:
        return self.k * dt

    def outside(self, fov: Tuple[float, float]) -> List[float]:
        """시야 밖에 있는 측정값 목록 (표적 측정은 잘라내지 않음)"""
        return [y for y in self.measurements if not (fov[0] <= y <= fov[1])]


# =============================================================================
# 운동 모델
# =============================================================================


def motion_matrices(p: ScenarioParams) -> Tuple[np.ndarray, np.ndarray]:
    """등속 모델 F와 프로세스 잡음 Q_proc"""
    dt = float(p.dt)
    if dt <= 0.0:
        raise ArgumentError(f"스캔 간격 Δt는 양수여야 합니다: {dt}")
    transition = np.array([[1.0, dt], [0.0, 1.0]])
    process = p.sigma_p2 * np.array([[dt**3 / 3.0, dt**2 / 2.0], [dt**2 / 2.0, dt]])
    return transition, process


def predict(s: TargetState, F: np.ndarray, Qproc: np.ndarray) -> TargetState:
    mean, cov = kf_predict(s.mean.copy(), s.cov.copy(), F, Qproc)
    return TargetState(np.asarray(mean).reshape(-1), 0.5 * (cov + cov.T))


def init_targets(p: ScenarioParams) -> List[TargetState]:
    """표적 i(1부터): 위치 (i-1) m, 속도 2(i-1) m/s, 공분산 P_{0|0}"""
    return [TargetState(np.array([float(i), 2.0 * i]), p.p0) for i in range(p.n_targets)]


def propagate_truth(
    x: np.ndarray, F: np.ndarray, Qproc: np.ndarray, rng: np.random.Generator, stochastic: bool
) -> np.ndarray:
    mean = F @ np.asarray(x, dtype=float)
    if not stochastic or not np.any(Qproc):
        return mean
    return rng.multivariate_normal(mean, Qproc)


# =============================================================================
# 측정 시뮬레이션
# =============================================================================


def simulate_scan(
    truth: Sequence[np.ndarray], p: ScenarioParams, rng: np.random.Generator, k: int = 0, p_d: Optional[float] = None
) -> Scan:
    """
    한 스캔의 측정 생성

    p_d를 따로 주면 파라미터의 검출 확률 대신 사용합니다 (0, 1 극한 시험용).
    """
    detect_prob = p.p_d if p_d is None else float(p_d)
    noise_sd = float(np.sqrt(p.sigma_m2))

    values: List[float] = []
    origins: List[int] = []
    for index, state in enumerate(truth, start=1):
        if rng.random() < detect_prob:
            values.append(float(rng.normal(float(state[0]), noise_sd)))
            origins.append(index)

    n_clutter = int(rng.poisson(p.clutter_rate))
    values.extend(rng.uniform(p.fov[0], p.fov[1], size=n_clutter).tolist())
    origins.extend([0] * n_clutter)

    order = rng.permutation(len(values))
    scan = Scan(k, tuple(values[i] for i in order), tuple(origins[i] for i in order))
    logger.debug(f"스캔 {k}: 표적 측정 {len(values) - n_clutter}개, 클러터 {n_clutter}개")
    return scan


def simulate_scenario(p: ScenarioParams, n_scans: int) -> Tuple[List[List[np.ndarray]], List[Scan]]:
    """
    스캔 1..n_scans의 실제 궤적과 측정 생성

    truth_history[0]은 초기 상태(k=0), truth_history[k]는 스캔 k의 실제 상태입니다.
    p.fixed_scans에 있는 스캔은 시뮬레이션 대신 지정된 측정을 씁니다.
    """
    rng = np.random.default_rng(p.seed)
    transition, process = motion_matrices(p)
    truth = [state.mean for state in init_targets(p)]
    history = [truth]
    scans: List[Scan] = []
    for k in range(1, n_scans + 1):
        truth = [propagate_truth(x, transition, process, rng, not p.deterministic_truth) for x in truth]
        history.append(truth)
        simulated = simulate_scan(truth, p, rng, k)
        if k in p.fixed_scans:
            scans.append(Scan(k, tuple(p.fixed_scans[k])))
        else:
            scans.append(simulated)
    return history, scans


def scenario_predictions(p: ScenarioParams, truth_prev: Sequence[np.ndarray]) -> List[TargetState]:
    """직전 실제 상태를 중심(공분산 P_{0|0})으로 한 1스텝 예측 (그림 재현용 구성)"""
    transition, process = motion_matrices(p)
    return [predict(TargetState(x, p.p0), transition, process) for x in truth_prev]
