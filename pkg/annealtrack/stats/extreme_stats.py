#!/usr/bin/env python3
# 파일명: extreme_stats.py
# 설명: 최솟값 Gumbel 분포 계산과 런별 최소 에너지의 최대우도 적합
# 작성일: 2024
"""
최솟값 Gumbel 분포

    p(x; α, β) = (1/β) exp[(x-α)/β - exp((x-α)/β)],   β > 0

scipy.stats.gumbel_l 이 같은 분포(loc=α, scale=β)입니다.

최대우도 적합은 β에 대한 프로파일 방정식

    g(β) = β + mean(x) - Σ x·w / Σ w,   w = exp(x/β)

의 근을 brentq로 찾은 뒤 α = β·log(mean(exp(x/β)))로 닫힌 형태로 구합니다.
표준화한 자료에서 적합한 뒤 원래 단위로 되돌리므로 위치/척도 변환에 대해
결과가 정확히 따라 움직입니다.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Union

import numpy as np
from loguru import logger
from scipy.optimize import brentq
from scipy.special import logsumexp
from scipy.stats import gumbel_l

from ..errors import ArgumentError, DegenerateDataError

MIN_FIT_SAMPLES = 10
BRACKET_STEPS = 200


@dataclass(frozen=True)
class GumbelParams:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.beta > 0.0) or not np.isfinite(self.beta):
            raise ArgumentError(f"Gumbel 척도 β는 양수여야 합니다: {self.beta}")
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))


def gumbel_pdf(x: Union[float, np.ndarray], p: GumbelParams):
    return gumbel_l.pdf(x, loc=p.alpha, scale=p.beta)


def gumbel_logpdf(x: Union[float, np.ndarray], p: GumbelParams):
    return gumbel_l.logpdf(x, loc=p.alpha, scale=p.beta)


def gumbel_loglik(samples: Sequence[float], p: GumbelParams) -> float:
    return float(np.sum(gumbel_logpdf(np.asarray(samples, dtype=float), p)))


def sample_gumbel(p: GumbelParams, size: int, rng: np.random.Generator) -> np.ndarray:
    return gumbel_l.rvs(loc=p.alpha, scale=p.beta, size=size, random_state=rng)


# =============================================================================
# 최대우도 적합
# =============================================================================


def _profile(beta: float, z: np.ndarray) -> float:
    shifted = (z - z.max()) / beta
    weights = np.exp(shifted)
    return beta + z.mean() - float(np.sum(weights * z) / np.sum(weights))


def _fit_standardized(z: np.ndarray) -> GumbelParams:
    spread = float(z.max() - z.min())
    lo, hi = 1e-3 * spread, spread
    for _ in range(BRACKET_STEPS):
        if _profile(lo, z) < 0.0:
            break
        lo *= 0.5
    for _ in range(BRACKET_STEPS):
        if _profile(hi, z) > 0.0:
            break
        hi *= 2.0
    beta = brentq(_profile, lo, hi, args=(z,), xtol=1e-14, rtol=1e-14, maxiter=500)
    alpha = beta * (logsumexp(z / beta) - np.log(z.size))
    return GumbelParams(alpha, beta)


def fit_gumbel_mle(samples: Sequence[float]) -> GumbelParams:
    data = np.asarray(samples, dtype=float).reshape(-1)
    if data.size < MIN_FIT_SAMPLES:
        raise DegenerateDataError(f"적합에는 표본 {MIN_FIT_SAMPLES}개 이상이 필요합니다: {data.size}개")
    if not np.all(np.isfinite(data)):
        raise DegenerateDataError("표본에 유한하지 않은 값이 있습니다")
    center, scale = float(data.mean()), float(data.std())
    if scale == 0.0 or data.max() == data.min():
        raise DegenerateDataError("표본이 모두 같은 값이라 척도를 추정할 수 없습니다")
    unit = _fit_standardized((data - center) / scale)
    fitted = GumbelParams(center + scale * unit.alpha, scale * unit.beta)
    logger.debug(f"Gumbel 적합: n={data.size}, α={fitted.alpha:.4f}, β={fitted.beta:.4f}")
    return fitted


def fit_report(samples: Sequence[float], params: Optional[GumbelParams] = None) -> Dict[str, float]:
    fitted = params or fit_gumbel_mle(samples)
    return {
        "alpha": fitted.alpha,
        "beta": fitted.beta,
        "n_samples": len(samples),
        "loglik": gumbel_loglik(samples, fitted),
    }


def run_minima(runs: Sequence) -> List[float]:
    """런 목록의 Ê0 (순서 유지)"""
    if len(runs) == 0:
        raise ArgumentError("런 목록이 비어 있습니다")
    return [float(r.e_hat0) for r in runs]
