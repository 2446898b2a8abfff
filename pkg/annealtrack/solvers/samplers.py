#!/usr/bin/env python3
# 파일명: samplers.py
# 설명: Ising 문제 샷/런 샘플링 (exact, sa, adiabatic, exhaustive 백엔드) 및 에너지 통계
# 작성일: 2024
"""
샘플러 모듈

하나의 '런'은 n_s개의 '샷'으로 이루어지고, 각 샷은 s=0 → s=1 한 번의
어닐링 결과(비트 상태와 H_P 에너지)입니다.

백엔드
- exact:      진짜 최소 상태 집합에서 균등하게 n_s개 추출 (n ≤ 24)
- sa:         배치 Metropolis 모의 담금질 n_s회 (기하 온도 스케줄)
- adiabatic:  상태벡터 단열 진화 1회 후 Born 규칙 측정 n_s회 (n ≤ 12)
- exhaustive: 에너지 오름차순 상위 min(n_s, 2^n)개 서로 다른 상태 (n ≤ 20)

샷 i의 난수열은 default_rng([seed, i])에서 나오므로 병렬/직렬 실행 결과가 같습니다.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ..core.qubo_core import (
    ENERGY_TOL,
    MAX_BRUTE_FORCE_SITES,
    BitVector,
    IsingModel,
    all_ising_energies,
    bitstring,
    brute_force_solve,
    index_to_bits,
    ising_energies,
    ising_to_qubo,
)
from ..errors import ArgumentError, SizeLimitError
from ..utils.parallel import ordered_map
from .adiabatic_sim import build_pair, evolve, measure

MAX_SHOTS = 10_000  # 런당 최대 샷 수
MAX_EXHAUSTIVE_SITES = 20
SHOT_BLOCK = 256  # 배치 담금질 블록 크기
SWEEP_CHUNK = 64  # 난수 미리 뽑는 스윕 단위
MIN_SWEEPS = 10


class Backend(str, Enum):
    """샘플링 백엔드 열거형"""

    EXACT = "exact"
    SA = "sa"
    ADIABATIC = "adiabatic"
    EXHAUSTIVE = "exhaustive"


@dataclass(frozen=True)
class Shot:
    state: BitVector
    energy: float

    @property
    def label(self) -> str:
        return bitstring(self.state)


@dataclass(frozen=True)
class AnnealParams:
    """런 파라미터"""

    n_s: int = 1000
    t_f: float = 100.0  # 어닐링 시간 (μs)
    seed: int = 0
    backend: Backend = Backend.SA
    sweeps_per_us: float = 1.0
    t_cold: float = 0.01
    threads: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "backend", Backend(self.backend))
        if not (1 <= int(self.n_s) <= MAX_SHOTS):
            raise ArgumentError(f"샷 수는 1..{MAX_SHOTS} 범위여야 합니다: {self.n_s}")
        if not (self.t_f > 0.0):
            raise ArgumentError(f"어닐링 시간 t_f는 양수여야 합니다: {self.t_f}")
        if not (self.sweeps_per_us > 0.0 and self.t_cold > 0.0):
            raise ArgumentError("sweeps_per_us, t_cold는 양수여야 합니다")
        object.__setattr__(self, "n_s", int(self.n_s))

    @property
    def sweeps(self) -> int:
        return max(MIN_SWEEPS, int(round(self.t_f * self.sweeps_per_us)))


@dataclass(frozen=True)
class RunResult:
    shots: Tuple[Shot, ...]
    backend: Backend
    seed: int
    t_f: float
    e_hat0: float = field(init=False)
    argmin_states: Tuple[BitVector, ...] = field(init=False)

    def __post_init__(self):
        if not self.shots:
            raise ArgumentError("샷이 없는 런입니다")
        e_min = min(shot.energy for shot in self.shots)
        winners = sorted({shot.state for shot in self.shots if shot.energy <= e_min + ENERGY_TOL})
        object.__setattr__(self, "shots", tuple(self.shots))
        object.__setattr__(self, "e_hat0", float(e_min))
        object.__setattr__(self, "argmin_states", tuple(winners))

    @property
    def n_s(self) -> int:
        return len(self.shots)

    @property
    def energies(self) -> np.ndarray:
        return np.array([shot.energy for shot in self.shots])


# =============================================================================
# 모의 담금질
# =============================================================================


def shot_rng(seed: int, shot_index: int) -> np.random.Generator:
    return np.random.default_rng([int(seed), int(shot_index)])


def temperature_schedule(model: IsingModel, sweeps: int, t_cold: float) -> np.ndarray:
    """T_hot = 2·max|계수| 에서 t_cold 까지 기하 감소"""
    t_hot = 2.0 * model.max_coefficient()
    if t_hot <= t_cold:
        t_hot = max(1.0, 2.0 * t_cold)
    return np.geomspace(t_hot, t_cold, sweeps)


def _anneal_block(model: IsingModel, shot_ids: Sequence[int], seed: int, temps: np.ndarray) -> np.ndarray:
    n = model.n
    coupling = np.array(model.J)
    np.fill_diagonal(coupling, 0.0)  # σ_i² = 1: 대각 성분은 상수항
    columns = coupling.T
    bias = model.effective_field
    streams = [shot_rng(seed, i) for i in shot_ids]
    spins = np.stack([2.0 * g.integers(0, 2, size=n) - 1.0 for g in streams])
    rows = np.arange(len(shot_ids))

    for chunk_start in range(0, len(temps), SWEEP_CHUNK):
        chunk_temps = temps[chunk_start : chunk_start + SWEEP_CHUNK]
        uniforms = np.stack([g.random((len(chunk_temps), n)) for g in streams])
        # 샷마다, 스윕마다 새 방문 순서
        orders = np.stack([np.stack([g.permutation(n) for _ in chunk_temps]) for g in streams])
        for t, temperature in enumerate(chunk_temps):
            for k in range(n):
                sites = orders[:, t, k]
                local = np.einsum("rj,rj->r", spins, columns[sites])
                current = spins[rows, sites]
                delta = 2.0 * current * (2.0 * local + bias[sites])
                accept = (delta <= 0.0) | (uniforms[rows, t, k] < np.exp(-np.maximum(delta, 0.0) / temperature))
                spins[rows[accept], sites[accept]] *= -1.0
    return spins


def simulated_anneal(
    model: IsingModel,
    n_s: int,
    sweeps: int,
    seed: int,
    t_cold: float = 0.01,
    threads: Optional[int] = None,
) -> np.ndarray:
    """n_s회의 독립 Metropolis 담금질, 최종 스핀 배열(n_s×n) 반환"""
    temps = temperature_schedule(model, sweeps, t_cold)
    blocks = [list(range(start, min(n_s, start + SHOT_BLOCK))) for start in range(0, n_s, SHOT_BLOCK)]
    parts = ordered_map(lambda ids: _anneal_block(model, ids, seed, temps), blocks, threads)
    return np.concatenate(parts, axis=0)


# =============================================================================
# 백엔드별 런
# =============================================================================


def _shots_from_bits(model: IsingModel, bits: np.ndarray) -> Tuple[Shot, ...]:
    energies = ising_energies(model, 2.0 * np.asarray(bits, dtype=float) - 1.0)
    return tuple(Shot(tuple(int(b) for b in row), float(e)) for row, e in zip(bits, energies))


def _run_exact(model: IsingModel, p: AnnealParams) -> np.ndarray:
    if model.n > MAX_BRUTE_FORCE_SITES:
        raise SizeLimitError(f"exact 백엔드는 n ≤ {MAX_BRUTE_FORCE_SITES}: n={model.n}")
    _, winners = brute_force_solve(ising_to_qubo(model), max_workers=p.threads)
    picks = np.random.default_rng(p.seed).integers(len(winners), size=p.n_s)
    return np.array([winners[i] for i in picks], dtype=np.int8)


def _run_exhaustive(model: IsingModel, p: AnnealParams) -> np.ndarray:
    if model.n > MAX_EXHAUSTIVE_SITES:
        raise SizeLimitError(f"exhaustive 백엔드는 n ≤ {MAX_EXHAUSTIVE_SITES}: n={model.n}")
    energies = all_ising_energies(model)
    order = np.lexsort((np.arange(energies.size), energies))[: min(p.n_s, energies.size)]
    return index_to_bits(order, model.n)


def _run_sa(model: IsingModel, p: AnnealParams) -> np.ndarray:
    spins = simulated_anneal(model, p.n_s, p.sweeps, p.seed, p.t_cold, p.threads)
    return ((spins + 1.0) / 2.0).astype(np.int8)


def _run_adiabatic(model: IsingModel, p: AnnealParams) -> np.ndarray:
    pair = build_pair(model)
    trajectory = evolve(pair, p.t_f)
    return measure(trajectory.final_state, np.random.default_rng(p.seed), p.n_s)


_BACKENDS = {
    Backend.EXACT: _run_exact,
    Backend.SA: _run_sa,
    Backend.ADIABATIC: _run_adiabatic,
    Backend.EXHAUSTIVE: _run_exhaustive,
}


def run(model: IsingModel, p: AnnealParams) -> RunResult:
    bits = _BACKENDS[p.backend](model, p)
    result = RunResult(_shots_from_bits(model, bits), p.backend, p.seed, p.t_f)
    logger.debug(f"런 완료: backend={p.backend.value}, n={model.n}, n_s={p.n_s}, Ê0={result.e_hat0:.6f}")
    return result


def run_many(model: IsingModel, p: AnnealParams, n_runs: int) -> List[RunResult]:
    """시드 seed, seed+1, ... 로 n_runs번 실행"""
    if n_runs < 1:
        raise ArgumentError(f"런 수는 1 이상이어야 합니다: {n_runs}")
    results = []
    for r in range(n_runs):
        params = AnnealParams(p.n_s, p.t_f, p.seed + r, p.backend, p.sweeps_per_us, p.t_cold, p.threads)
        results.append(run(model, params))
    return results


# =============================================================================
# 에너지 통계
# =============================================================================


def density_of_states(r: RunResult, tol: float = ENERGY_TOL) -> List[Tuple[float, float]]:
    """에너지별 샷 비율 (tol 이내 값은 같은 칸)"""
    energies = np.sort(r.energies)
    if energies.size == 0:
        raise ArgumentError("빈 런의 상태 밀도는 정의되지 않습니다")
    bins: List[List[float]] = []
    for value in energies:
        if bins and value - bins[-1][0] <= tol:
            bins[-1][1] += 1
        else:
            bins.append([float(value), 1])
    return [(e, count / energies.size) for e, count in bins]


def ground_state_fraction(r: RunResult, e0: float, tol: float = ENERGY_TOL) -> float:
    return float(np.mean(np.abs(r.energies - e0) <= tol))


def degenerate_coverage(r: RunResult, ground_set: Iterable[Sequence[int]]) -> float:
    targets: FrozenSet[BitVector] = frozenset(tuple(int(b) for b in s) for s in ground_set)
    if not targets:
        raise ArgumentError("바닥 상태 집합이 비어 있습니다")
    return len(targets.intersection(r.argmin_states)) / len(targets)


def run_to_dict(r: RunResult) -> Dict[str, object]:
    return {
        "backend": r.backend.value,
        "seed": r.seed,
        "n_s": r.n_s,
        "t_f_us": r.t_f,
        "e_hat0": r.e_hat0,
        "shots": [{"state": shot.label, "energy": shot.energy} for shot in r.shots],
        "histogram": [[e, frac] for e, frac in density_of_states(r)],
    }
