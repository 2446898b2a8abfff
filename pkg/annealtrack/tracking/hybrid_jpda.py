#!/usr/bin/env python3
# 파일명: hybrid_jpda.py
# 설명: 샘플링된 저에너지 상태 → 연관 사후확률 → 주변 가중치 → 모멘트 정합 JPDA 갱신
# 작성일: 2024
"""
하이브리드 JPDA 모듈

한 스캔의 추적 재귀:

    예측 → 비용 행렬 Γ → MTDA Ising → 샘플링 → 연관 사후확률
         → 주변 가중치 β → 혼합 가우시안 모멘트 정합 갱신

사후확률은 고전적 연관 우도로만 가중하고, 샘플러 빈도는 진단에 따로 기록합니다.
실행 불가능한 샘플 상태는 수리하지 않고 버립니다.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from filterpy.kalman import update as kf_update
from loguru import logger
from scipy.special import logsumexp

from ..core.qubo_core import bits_to_index
from ..errors import ArgumentError, EmptyPosteriorError, SizeLimitError
from ..problems.problem_builders import DEFAULT_C, DEFAULT_C_TILDE, decode_state, mtda_ising
from ..solvers.samplers import AnnealParams, RunResult, density_of_states, run
from .assoc_cost import (
    AssociationMatrix,
    CostMatrix,
    all_missed,
    association_log_likelihood,
    build_cost_matrix,
    enumerate_feasible,
    is_feasible,
)
from .tracking_model import MEASUREMENT_H, Scan, ScenarioParams, TargetState, motion_matrices, predict

DEFAULT_TOP_K = 64
MAX_REFERENCE_SIZE = 4  # 정확 JPDA 열거 한계 (N, M)
WEIGHT_TOL = 1e-10
ROW_SUM_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class AssociationPosterior:
    states: Tuple[AssociationMatrix, ...]
    weights: np.ndarray
    n_discarded: int = 0  # 버려진 실행 불가능 샷 수
    sampler_frequencies: Tuple[float, ...] = ()

    def __post_init__(self):
        weights = np.asarray(self.weights, dtype=float).reshape(-1)
        if len(self.states) == 0 or weights.size != len(self.states):
            raise ArgumentError("사후확률 상태와 가중치 개수가 맞지 않습니다")
        if np.any(weights < 0.0) or abs(weights.sum() - 1.0) > WEIGHT_TOL:
            raise ArgumentError(f"가중치 합이 1이 아닙니다: {weights.sum():.12f}")
        if not all(is_feasible(s) for s in self.states):
            raise ArgumentError("사후확률에 실행 불가능한 연관 행렬이 있습니다")
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "weights", weights)

    def weight_of(self, S: AssociationMatrix) -> float:
        for state, weight in zip(self.states, self.weights):
            if state == S:
                return float(weight)
        return 0.0


@dataclass(frozen=True, eq=False)
class MarginalWeights:
    beta: np.ndarray

    def __post_init__(self):
        beta = np.asarray(self.beta, dtype=float)
        if beta.ndim != 2 or beta.shape[0] < 2:
            raise ArgumentError(f"β 형태 오류: {beta.shape}")
        sums = beta[1:].sum(axis=1)
        if np.any(np.abs(sums - 1.0) > ROW_SUM_TOL):
            raise ArgumentError(f"표적 행 β 합이 1이 아닙니다: {sums}")
        object.__setattr__(self, "beta", beta)


@dataclass(frozen=True, eq=False)
class StepDiagnostics:
    """스캔 하나의 재귀 진단 기록"""

    k: int
    predictions: Tuple[TargetState, ...]
    cost: CostMatrix
    posterior: AssociationPosterior
    marginals: MarginalWeights
    e_hat0: Optional[float] = None
    histogram: List[Tuple[float, float]] = field(default_factory=list)
    hard_assignment: Optional[AssociationMatrix] = None
    fell_back: bool = False


# =============================================================================
# 사후확률
# =============================================================================


def _normalized(log_weights: Sequence[float]) -> np.ndarray:
    values = np.asarray(log_weights, dtype=float)
    weights = np.exp(values - logsumexp(values))
    return weights / weights.sum()


def soft_association(
    r: RunResult, preds: Sequence[TargetState], scan: Scan, p: ScenarioParams, top_k: int = DEFAULT_TOP_K
) -> AssociationPosterior:
    if top_k < 1:
        raise ArgumentError(f"top_k는 1 이상이어야 합니다: {top_k}")
    n, m = len(preds), scan.m

    # 복호화 후 같은 연관 행렬은 가장 낮은 샷 에너지로 대표
    best: Dict[AssociationMatrix, Tuple[float, int]] = {}
    counts: Dict[AssociationMatrix, int] = {}
    discarded = 0
    for shot in r.shots:
        S = decode_state(shot.state, n, m)
        if not is_feasible(S):
            discarded += 1
            continue
        counts[S] = counts.get(S, 0) + 1
        order_key = (shot.energy, bits_to_index(shot.state))
        if S not in best or order_key < best[S]:
            best[S] = order_key
    if not best:
        raise EmptyPosteriorError(f"샷 {r.n_s}개 중 실행 가능한 연관이 없습니다")

    kept = sorted(best, key=lambda S: best[S])[:top_k]
    weights = _normalized([association_log_likelihood(S, preds, scan, p) for S in kept])
    frequencies = tuple(counts[S] / r.n_s for S in kept)
    logger.debug(f"소프트 연관: 실행 가능 {len(best)}개 중 {len(kept)}개 사용, 버린 샷 {discarded}개")
    return AssociationPosterior(tuple(kept), weights, discarded, frequencies)


def exact_jpda_reference(preds: Sequence[TargetState], scan: Scan, p: ScenarioParams) -> AssociationPosterior:
    n, m = len(preds), scan.m
    if n > MAX_REFERENCE_SIZE or m > MAX_REFERENCE_SIZE:
        raise SizeLimitError(f"정확 JPDA 열거는 N, M ≤ {MAX_REFERENCE_SIZE}: N={n}, M={m}")
    states = list(enumerate_feasible(n, m))
    weights = _normalized([association_log_likelihood(S, preds, scan, p) for S in states])
    return AssociationPosterior(tuple(states), weights)


def marginal_probs(post: AssociationPosterior) -> MarginalWeights:
    beta = np.zeros(post.states[0].S.shape)
    for state, weight in zip(post.states, post.weights):
        beta += weight * state.S
    beta[0, 0] = 0.0
    return MarginalWeights(beta)


# =============================================================================
# 갱신
# =============================================================================


def jpda_update(
    preds: Sequence[TargetState], scan: Scan, beta: MarginalWeights, sigma_m2: float
) -> List[TargetState]:
    """표적별 조건부 칼만 갱신의 혼합을 평균/공분산이 같은 단일 가우시안으로 근사"""
    weights = beta.beta
    if weights.shape != (len(preds) + 1, scan.m + 1):
        raise ArgumentError(f"β 형태 {weights.shape}가 표적/측정 수와 맞지 않습니다")
    if sigma_m2 <= 0.0:
        raise ArgumentError(f"측정 분산 σ_M²는 양수여야 합니다: {sigma_m2}")
    noise = np.array([[sigma_m2]])

    updated = []
    for i, pred in enumerate(preds, start=1):
        means = [pred.mean]
        covs = [pred.cov]
        for y in scan.measurements:
            mean_j, cov_j = kf_update(pred.mean.copy(), pred.cov.copy(), np.array([y]), noise, MEASUREMENT_H)
            means.append(np.asarray(mean_j).reshape(-1))
            covs.append(np.asarray(cov_j))
        row = weights[i]
        mixture_mean = sum(w * mu for w, mu in zip(row, means))
        mixture_cov = np.zeros((2, 2))
        for w, mu, cov in zip(row, means, covs):
            spread = (mu - mixture_mean)[:, None]
            mixture_cov += w * (cov + spread @ spread.T)
        updated.append(TargetState(mixture_mean, 0.5 * (mixture_cov + mixture_cov.T)))
    return updated


def hard_assignment(r: RunResult, n: int, m: int) -> Optional[AssociationMatrix]:
    """에너지가 가장 낮은 실행 가능 복호 상태 (없으면 None)"""
    for shot in sorted(r.shots, key=lambda s: (s.energy, s.state)):
        S = decode_state(shot.state, n, m)
        if is_feasible(S):
            return S
    return None


def recursion_step(
    states: Sequence[TargetState],
    scan: Scan,
    p: ScenarioParams,
    ap: AnnealParams,
    c: float = DEFAULT_C,
    c_tilde: float = DEFAULT_C_TILDE,
    top_k: int = DEFAULT_TOP_K,
) -> Tuple[List[TargetState], StepDiagnostics]:
    transition, process = motion_matrices(p)
    preds = [predict(s, transition, process) for s in states]
    cost = build_cost_matrix(preds, scan, p)
    n, m = len(preds), scan.m

    if m == 0:
        # 측정이 없으면 가능한 연관은 '모두 미검출' 하나뿐
        posterior = AssociationPosterior((all_missed(n, 0),), np.ones(1))
        marginals = marginal_probs(posterior)
        diagnostics = StepDiagnostics(scan.k, tuple(preds), cost, posterior, marginals, hard_assignment=posterior.states[0])
        return jpda_update(preds, scan, marginals, p.sigma_m2), diagnostics

    result = run(mtda_ising(cost, c, c_tilde), ap)
    fell_back = False
    try:
        posterior = soft_association(result, preds, scan, p, top_k)
    except EmptyPosteriorError as exc:
        logger.warning(f"스캔 {scan.k}: {exc} → 모든 표적 미검출 가설 사용")
        discarded = result.n_s
        posterior = AssociationPosterior((all_missed(n, m),), np.ones(1), discarded)
        fell_back = True

    marginals = marginal_probs(posterior)
    diagnostics = StepDiagnostics(
        k=scan.k,
        predictions=tuple(preds),
        cost=cost,
        posterior=posterior,
        marginals=marginals,
        e_hat0=result.e_hat0,
        histogram=density_of_states(result),
        hard_assignment=hard_assignment(result, n, m),
        fell_back=fell_back,
    )
    return jpda_update(preds, scan, marginals, p.sigma_m2), diagnostics


def track_record(diagnostics: StepDiagnostics, updated: Sequence[TargetState]) -> Dict[str, object]:
    """JSON-lines 추적 출력 레코드"""
    hard = diagnostics.hard_assignment
    return {
        "k": diagnostics.k,
        "predicted": [s.to_dict() for s in diagnostics.predictions],
        "updated": [s.to_dict() for s in updated],
        "beta": diagnostics.marginals.beta.tolist(),
        "hard_assignment": hard.S.tolist() if hard is not None else None,
        "e_hat0": diagnostics.e_hat0,
        "n_discarded": diagnostics.posterior.n_discarded,
        "fell_back": diagnostics.fell_back,
        "sampler_frequencies": list(diagnostics.posterior.sampler_frequencies),
        "posterior_size": len(diagnostics.posterior.states),
    }
