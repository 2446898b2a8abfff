#!/usr/bin/env python3
# 파일명: assoc_cost.py
# 설명: 연관 비용 행렬 Γ 계산, 연관 행렬 실행 가능성 판정, 연관 우도 평가
# 작성일: 2024
"""
연관 비용 모듈

행 i = 0..N (0: 클러터 행, 1..N: 표적), 열 j = 0..M (0: 미검출 열, 1..M: 측정).

    Γ[i][0]  = -log(1 - p_d)
    Γ[0][j]  = log(|FoV| / λ)              (j > 0)
    Γ[i][j]  = -log p_d + γ_ij             (i, j > 0)
    γ_ij     = ½ d²/S + ½ log(2π S)

S[0][0]은 의미가 없으므로 항상 0으로 두고 비용 합에서 제외합니다.
"""

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, List, Sequence

import numpy as np

from ..errors import ArgumentError, FeasibilityError
from .tracking_model import MEASUREMENT_H, Scan, ScenarioParams, TargetState


@dataclass(frozen=True)
class Innovation:
    d: float
    s: float

    def __post_init__(self):
        if not (self.s > 0.0):
            raise ArgumentError(f"혁신 분산 S_k는 양수여야 합니다: {self.s}")


@dataclass(frozen=True)
class CostMatrix:
    """(N+1)×(M+1) 비용 행렬과 생성 파라미터"""

    gamma: np.ndarray
    p_d: float
    clutter_rate: float
    fov_length: float

    def __post_init__(self):
        entries = np.array(self.gamma, dtype=float)
        if entries.ndim != 2 or entries.shape[0] < 2 or entries.shape[1] < 1:
            raise ArgumentError(f"비용 행렬 형태 오류: {entries.shape}")
        entries.setflags(write=False)
        object.__setattr__(self, "gamma", entries)

    @property
    def n_targets(self) -> int:
        return self.gamma.shape[0] - 1

    @property
    def n_measurements(self) -> int:
        return self.gamma.shape[1] - 1

    def csv_header(self) -> List[str]:
        return ["i\\j"] + [str(j) for j in range(self.n_measurements + 1)]

    def to_csv_rows(self) -> List[list]:
        return [[i] + [float(v) for v in row] for i, row in enumerate(self.gamma)]


@dataclass(frozen=True)
class AssociationMatrix:
    """이진 연관 행렬 S ((0,0) 성분은 무시)"""

    S: np.ndarray

    def __post_init__(self):
        entries = np.array(self.S)
        if entries.ndim != 2 or entries.shape[0] < 2 or entries.shape[1] < 1:
            raise ArgumentError(f"연관 행렬 형태 오류: {entries.shape}")
        if not np.all((entries == 0) | (entries == 1)):
            raise ArgumentError("연관 행렬 원소는 0 또는 1이어야 합니다")
        entries = entries.astype(np.int8)
        entries.setflags(write=False)
        object.__setattr__(self, "S", entries)

    @property
    def n_targets(self) -> int:
        return self.S.shape[0] - 1

    @property
    def n_measurements(self) -> int:
        return self.S.shape[1] - 1

    @property
    def n_detections(self) -> int:
        return int(self.S[1:, 1:].sum())

    def key(self) -> bytes:
        """(0,0) 성분을 뺀 비교용 키"""
        canonical = self.S.copy()
        canonical[0, 0] = 0
        return canonical.tobytes()

    def assignment(self) -> List[int]:
        """표적 i(1..N)별 할당된 측정 번호 (0 = 미검출)"""
        return [int(np.argmax(row)) if row.any() else -1 for row in self.S[1:]]

    def __eq__(self, other) -> bool:
        if not isinstance(other, AssociationMatrix):
            return NotImplemented
        return self.S.shape == other.S.shape and self.key() == other.key()

    def __hash__(self) -> int:
        return hash((self.S.shape, self.key()))


# =============================================================================
# 비용 계산
# =============================================================================


def innovation(pred: TargetState, y: float, sigma_m2: float) -> Innovation:
    if sigma_m2 <= 0.0:
        raise ArgumentError(f"측정 분산 σ_M²는 양수여야 합니다: {sigma_m2}")
    residual = float(y) - (MEASUREMENT_H @ pred.mean).item()
    variance = (MEASUREMENT_H @ pred.cov @ MEASUREMENT_H.T).item() + sigma_m2
    return Innovation(residual, variance)


def gamma_term(inn: Innovation) -> float:
    if not (inn.s > 0.0):
        raise ArgumentError(f"혁신 분산 S_k는 양수여야 합니다: {inn.s}")
    return 0.5 * inn.d**2 / inn.s + 0.5 * math.log(2.0 * math.pi * inn.s)


def _check_rates(scan: Scan, p: ScenarioParams) -> None:
    if p.clutter_rate == 0.0 and scan.m > 0:
        raise ArgumentError("λ = 0 이면 측정이 있는 스캔의 클러터 가설 비용이 발산합니다")


def build_cost_matrix(preds: Sequence[TargetState], scan: Scan, p: ScenarioParams) -> CostMatrix:
    if len(preds) < 1:
        raise ArgumentError("표적 예측이 최소 1개 필요합니다")
    _check_rates(scan, p)
    n, m = len(preds), scan.m
    gamma = np.empty((n + 1, m + 1))
    gamma[:, 0] = -math.log(1.0 - p.p_d)
    if m:
        gamma[0, 1:] = math.log(p.fov_length / p.clutter_rate)
    for i, pred in enumerate(preds, start=1):
        for j, y in enumerate(scan.measurements, start=1):
            gamma[i, j] = -math.log(p.p_d) + gamma_term(innovation(pred, y, p.sigma_m2))
    return CostMatrix(gamma, p.p_d, p.clutter_rate, p.fov_length)


# =============================================================================
# 실행 가능성 / 우도
# =============================================================================


def is_feasible(S: AssociationMatrix) -> bool:
    """표적 행 합 = 1 (i>0), 측정 열 합 = 1 (j>0)"""
    rows_ok = np.all(S.S[1:, :].sum(axis=1) == 1)
    cols_ok = np.all(S.S[:, 1:].sum(axis=0) == 1)
    return bool(rows_ok and cols_ok)


def association_log_likelihood(
    S: AssociationMatrix, preds: Sequence[TargetState], scan: Scan, p: ScenarioParams
) -> float:
    if S.n_targets != len(preds) or S.n_measurements != scan.m:
        raise ArgumentError(f"연관 행렬 형태 {S.S.shape}가 표적 {len(preds)}, 측정 {scan.m}과 맞지 않습니다")
    if not is_feasible(S):
        raise FeasibilityError("실행 불가능한 연관 행렬입니다")
    n, m, n_d = len(preds), scan.m, S.n_detections
    value = (n - n_d) * math.log(1.0 - p.p_d) + n_d * math.log(p.p_d)
    if m - n_d:
        _check_rates(scan, p)
        value += (m - n_d) * math.log(p.clutter_rate / p.fov_length)
    for i, j in zip(*np.nonzero(S.S[1:, 1:])):
        value -= gamma_term(innovation(preds[i], scan.measurements[j], p.sigma_m2))
    return value


def association_likelihood(S: AssociationMatrix, preds: Sequence[TargetState], scan: Scan, p: ScenarioParams) -> float:
    return math.exp(association_log_likelihood(S, preds, scan, p))


def association_cost(S: AssociationMatrix, cost: CostMatrix) -> float:
    """Σ_{(i,j)≠(0,0)} Γ_ij S_ij"""
    weights = S.S.astype(float)
    weights[0, 0] = 0.0
    return float(np.sum(weights * cost.gamma))


# =============================================================================
# 열거
# =============================================================================


def count_feasible(n: int, m: int) -> int:
    return sum(math.comb(n, d) * math.comb(m, d) * math.factorial(d) for d in range(min(n, m) + 1))


def enumerate_feasible(n: int, m: int) -> Iterator[AssociationMatrix]:
    """
    모든 실행 가능한 연관 행렬 생성

    표적마다 측정 번호(0 = 미검출)를 고르고, 측정이 겹치지 않는 조합만
    남깁니다. 선택되지 않은 측정은 클러터 행에 배정됩니다.
    """
    if n < 1 or m < 0:
        raise ArgumentError(f"열거 범위 오류: N={n}, M={m}")
    for choice in itertools.product(range(m + 1), repeat=n):
        used = [j for j in choice if j > 0]
        if len(used) != len(set(used)):
            continue
        matrix = np.zeros((n + 1, m + 1), dtype=np.int8)
        for i, j in enumerate(choice, start=1):
            matrix[i, j] = 1
        for j in range(1, m + 1):
            if j not in used:
                matrix[0, j] = 1
        yield AssociationMatrix(matrix)


def all_missed(n: int, m: int) -> AssociationMatrix:
    """모든 표적 미검출, 모든 측정 클러터"""
    matrix = np.zeros((n + 1, m + 1), dtype=np.int8)
    matrix[1:, 0] = 1
    matrix[0, 1:] = 1
    return AssociationMatrix(matrix)
