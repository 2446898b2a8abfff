#!/usr/bin/env python3
# 파일명: problem_builders.py
# 설명: k-rooks, 편향 k-rooks, 다중표적 데이터 연관(MTDA) Ising 모델 생성 및 상태 복호화
# 작성일: 2024
"""
문제 생성 모듈

문제 해밀토니안은 다음 형태로 만듭니다.

    H_P = Σ_ij Q_ij σ_i σ_j + Σ_i q_i σ_i

이 식을 IsingModel 규약(-σ^T J σ - μ h^T σ)에 맞추면 J = -Q, h = -q, μ = 1 입니다.
행렬 셀 (i, j)는 열 우선(column-major) 벡터화로 사이트 j·(행 수) + i 에 놓입니다.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..core.qubo_core import IsingModel
from ..errors import ArgumentError
from ..tracking.assoc_cost import AssociationMatrix, CostMatrix

DEFAULT_C = 10.0  # 이차 제약 페널티
DEFAULT_C_TILDE = 1.0  # 선형 제약 페널티


# =============================================================================
# 크로네커 곱 도우미 행렬
# =============================================================================


def ones_vec(k: int) -> np.ndarray:
    return np.ones(k)


def ones0_vec(k: int) -> np.ndarray:
    """첫 성분만 0인 1 벡터"""
    vec = np.ones(k)
    vec[0] = 0.0
    return vec


def identity(k: int) -> np.ndarray:
    return np.eye(k)


def identity0(k: int) -> np.ndarray:
    """(0,0) 성분만 0인 단위행렬"""
    matrix = np.eye(k)
    matrix[0, 0] = 0.0
    return matrix


def offdiag_ones(k: int) -> np.ndarray:
    """대각이 0인 1 행렬"""
    return np.ones((k, k)) - np.eye(k)


@dataclass(frozen=True)
class ProblemLabels:
    """사이트 번호 ↔ 행렬 셀 (열 우선)"""

    n_rows: int
    n_cols: int

    @property
    def n_sites(self) -> int:
        return self.n_rows * self.n_cols

    def site(self, i: int, j: int) -> int:
        if not (0 <= i < self.n_rows and 0 <= j < self.n_cols):
            raise ArgumentError(f"셀 ({i}, {j})가 {self.n_rows}×{self.n_cols} 범위를 벗어났습니다")
        return j * self.n_rows + i

    def cell(self, site: int) -> Tuple[int, int]:
        if not (0 <= site < self.n_sites):
            raise ArgumentError(f"사이트 {site}가 범위를 벗어났습니다")
        return site % self.n_rows, site // self.n_rows

    def to_dict(self) -> Dict[str, object]:
        return {
            "rows": self.n_rows,
            "cols": self.n_cols,
            "order": "column-major",
            "sites": [[s, *self.cell(s)] for s in range(self.n_sites)],
        }


def _problem_to_ising(couplings: np.ndarray, fields: np.ndarray) -> IsingModel:
    return IsingModel(-couplings, -fields, 1.0, 0.0)


# =============================================================================
# k-rooks
# =============================================================================


def _krooks_terms(k: int) -> Tuple[np.ndarray, np.ndarray]:
    if k < 2:
        raise ArgumentError(f"k-rooks 크기는 k ≥ 2 이어야 합니다: {k}")
    couplings = np.kron(identity(k), offdiag_ones(k)) + np.kron(offdiag_ones(k), identity(k))
    fields = 2.0 * (2 * k - 4) * ones_vec(k * k)
    return couplings, fields


def krooks_ising(k: int) -> IsingModel:
    couplings, fields = _krooks_terms(k)
    return _problem_to_ising(couplings, fields)


def biased_krooks_ising(k: int, gamma0: float, m: int) -> IsingModel:
    """대각 셀 (1,1)..(m,m)에 -|γ0| 장을 추가해 바닥 상태 축퇴도를 (k-m)!로 줄임"""
    couplings, fields = _krooks_terms(k)
    if not (1 <= m <= k):
        raise ArgumentError(f"편향 대각 셀 개수는 1 ≤ m ≤ k 이어야 합니다: m={m}, k={k}")
    labels = ProblemLabels(k, k)
    for i in range(m):
        fields[labels.site(i, i)] -= abs(gamma0)
    return _problem_to_ising(couplings, fields)


# =============================================================================
# 다중표적 데이터 연관
# =============================================================================


def constraint_b_matrix(n: int, m: int) -> np.ndarray:
    """B_ij = (2N-2)·1{j>0} + (2M-2)·1{i>0}"""
    rows = np.arange(n + 1)[:, None] > 0
    cols = np.arange(m + 1)[None, :] > 0
    return (2 * n - 2) * cols + (2 * m - 2) * rows.astype(float)


def mtda_ising(cost: CostMatrix, c: float = DEFAULT_C, c_tilde: float = DEFAULT_C_TILDE) -> IsingModel:
    if not (c > 0.0):
        raise ArgumentError(f"페널티 c는 양수여야 합니다: {c}")
    if c_tilde < 0.0:
        raise ArgumentError(f"페널티 c̃는 음수일 수 없습니다: {c_tilde}")
    n, m = cost.n_targets, cost.n_measurements
    rows, cols = n + 1, m + 1

    # 같은 측정 열의 셀끼리 / 같은 표적 행의 셀끼리 결합
    w_col_groups = np.kron(identity0(cols), offdiag_ones(rows))
    w_row_groups = np.kron(offdiag_ones(cols), identity0(rows))
    theta_r = (2 * n - 2) * np.kron(ones0_vec(cols), ones_vec(rows))
    theta_c = (2 * m - 2) * np.kron(ones_vec(cols), ones0_vec(rows))

    gamma_vec = cost.gamma.flatten(order="F")
    couplings = c * (w_col_groups + w_row_groups)
    fields = c_tilde * (theta_r + theta_c) + gamma_vec
    return _problem_to_ising(couplings, fields)


def mtda_labels(n: int, m: int) -> ProblemLabels:
    return ProblemLabels(n + 1, m + 1)


def decode_state(x: Sequence[int], n: int, m: int) -> AssociationMatrix:
    bits = np.asarray(x, dtype=np.int8)
    if bits.shape != ((n + 1) * (m + 1),):
        raise ArgumentError(f"상태 길이 {bits.shape}가 (N+1)(M+1) = {(n + 1) * (m + 1)}와 다릅니다")
    matrix = bits.reshape((n + 1, m + 1), order="F").copy()
    matrix[0, 0] = 0
    return AssociationMatrix(matrix)


def encode_association(S: AssociationMatrix) -> List[int]:
    """열 우선 비트 벡터 ((0,0) 비트는 0)"""
    matrix = S.S.copy()
    matrix[0, 0] = 0
    return [int(v) for v in matrix.flatten(order="F")]
