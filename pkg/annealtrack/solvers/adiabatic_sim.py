#!/usr/bin/env python3
# 파일명: adiabatic_sim.py
# 설명: H(s) = (1-s)H_B + sH_P 상태벡터 시뮬레이션 (스펙트럼, 시간 진화, 단열 지표, 측정)
# 작성일: 2024
"""
단열 양자 어닐링 상태벡터 시뮬레이터 (n ≤ 12 큐비트)

- H_B = -Σ σ1^i  (횡자기장 구동 해밀토니안, scipy.sparse)
- H_P = diag(문제 에너지)  (σ3 기저, 상태 번호 순서)
- 단위: ħ = 1, s = t / t_f

시간 진화는 고정 스텝 4차 Magnus 적분기를 씁니다. 스텝 생성자

    K = h·H(s_mid) + i·h³/(12 t_f)·[H_B, H_P]

는 에르미트 행렬이므로 exp(-iK)는 유니터리이고 노름이 보존됩니다.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np
import scipy.linalg
import scipy.sparse as sparse
from loguru import logger
from scipy.sparse.linalg import eigsh, expm_multiply

from ..core.qubo_core import ENERGY_TOL, IsingModel, all_ising_energies, index_to_bits
from ..errors import AccuracyError, ArgumentError, DegeneracyError, SizeLimitError
from ..utils.parallel import ordered_map

MAX_QUBITS = 12
DENSE_EVOLVE_DIM = 128  # 이 이하에서는 스텝마다 밀집 고유분해
DENSE_SPECTRUM_DIM = 1024  # 이 이하에서는 밀집 대각화, 초과 시 Lanczos
NORM_TOL = 1e-6
MIN_STEPS = 100
DEFAULT_LEVELS = 4


# =============================================================================
# 데이터 클래스
# =============================================================================


@dataclass(frozen=True, eq=False)
class HamiltonianPair:
    n: int
    h_b: sparse.csr_matrix
    h_p: np.ndarray

    @property
    def dim(self) -> int:
        return 1 << self.n

    def sparse_at(self, s: float) -> sparse.csr_matrix:
        return ((1.0 - s) * self.h_b + s * sparse.diags(self.h_p)).tocsr()

    def dense_at(self, s: float) -> np.ndarray:
        matrix = (1.0 - s) * self.h_b.toarray()
        matrix[np.diag_indices(self.dim)] += s * self.h_p
        return matrix

    def ground_indices(self, tol: float = ENERGY_TOL) -> np.ndarray:
        """s = 1 바닥 상태 집합 (σ3 기저 상태 번호)"""
        return np.flatnonzero(self.h_p <= self.h_p.min() + tol)


@dataclass(frozen=True, eq=False)
class QuantumState:
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex)
        if abs(np.linalg.norm(amps) - 1.0) > NORM_TOL:
            raise AccuracyError(f"상태 노름이 1에서 벗어났습니다: {np.linalg.norm(amps):.9f}")
        object.__setattr__(self, "amplitudes", amps)

    @property
    def n(self) -> int:
        return int(round(math.log2(self.amplitudes.size)))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


@dataclass(frozen=True, eq=False)
class SpectrumTrace:
    s_grid: np.ndarray
    energies: np.ndarray  # (격자 점 수, L), 오름차순

    @property
    def gaps(self) -> np.ndarray:
        """E_1 - E_0 (준위가 하나뿐이면 NaN)"""
        if self.energies.shape[1] < 2:
            return np.full(self.s_grid.shape, np.nan)
        return self.energies[:, 1] - self.energies[:, 0]


@dataclass(frozen=True, eq=False)
class EvolutionTrajectory:
    t_f: float
    steps: int
    s: np.ndarray
    energies: np.ndarray  # 기록 시점별 추적 준위 에너지
    occupations: np.ndarray  # 기록 시점별 |<n(s)|ψ>|²
    ground_occupation: np.ndarray  # 축퇴 바닥 다양체 전체 점유율
    norms: np.ndarray
    final_state: QuantumState

    @property
    def final_ground_occupation(self) -> float:
        return float(self.ground_occupation[-1])


# =============================================================================
# 해밀토니안 구성
# =============================================================================


def driver_hamiltonian(n: int) -> sparse.csr_matrix:
    """-Σ_i σ1^i (0번 큐비트가 최상위 비트)"""
    dim = 1 << n
    basis = np.arange(dim)
    rows = np.concatenate([basis] * n)
    cols = np.concatenate([basis ^ (1 << (n - 1 - i)) for i in range(n)])
    data = -np.ones(rows.size)
    return sparse.csr_matrix((data, (rows, cols)), shape=(dim, dim))


def build_pair(model: IsingModel) -> HamiltonianPair:
    if model.n > MAX_QUBITS:
        raise SizeLimitError(f"상태벡터 시뮬레이션은 n ≤ {MAX_QUBITS}: n={model.n}")
    h_p = all_ising_energies(model)
    h_p.setflags(write=False)
    return HamiltonianPair(model.n, driver_hamiltonian(model.n), h_p)


def _check_grid(s_grid: Sequence[float]) -> np.ndarray:
    grid = np.asarray(s_grid, dtype=float).reshape(-1)
    if grid.size == 0 or np.any(grid < 0.0) or np.any(grid > 1.0):
        raise ArgumentError("s 격자 값은 [0, 1] 범위여야 합니다")
    return grid


def _lowest_eigenpairs(pair: HamiltonianPair, s: float, levels: int):
    if pair.dim <= DENSE_SPECTRUM_DIM:
        values, vectors = np.linalg.eigh(pair.dense_at(s))
        return values, vectors
    values, vectors = eigsh(pair.sparse_at(s), k=min(levels, pair.dim - 1), which="SA")
    order = np.argsort(values)
    return values[order], vectors[:, order]


def spectrum(pair: HamiltonianPair, s_grid: Sequence[float], levels: int = DEFAULT_LEVELS) -> SpectrumTrace:
    grid = _check_grid(s_grid)
    count = max(1, min(int(levels), pair.dim))
    rows = []
    for s in grid:
        if pair.dim <= DENSE_SPECTRUM_DIM:
            rows.append(np.linalg.eigvalsh(pair.dense_at(s))[:count])
        else:
            rows.append(_lowest_eigenpairs(pair, s, count)[0][:count])
    return SpectrumTrace(grid, np.array(rows))


def ground_state(pair: HamiltonianPair, s: float) -> QuantumState:
    _, vectors = _lowest_eigenpairs(pair, s, 1)
    return QuantumState(vectors[:, 0].astype(complex))


def initial_state(pair: HamiltonianPair) -> QuantumState:
    """H_B 바닥 상태: 모든 기저 상태의 균등 중첩"""
    return QuantumState(np.full(pair.dim, 1.0 / math.sqrt(pair.dim), dtype=complex))


# =============================================================================
# 시간 진화
# =============================================================================


def required_steps(pair: HamiltonianPair, t_f: float, max_phase_per_step: float = 1.0) -> int:
    """스텝당 위상 회전이 max_phase_per_step 이하가 되는 최소 스텝 수"""
    half_width = 0.5 * float(pair.h_p.max() - pair.h_p.min())
    bound = max(float(pair.n), half_width)
    return max(MIN_STEPS, int(math.ceil(t_f * bound / max_phase_per_step)))


def _record_occupations(pair: HamiltonianPair, s: float, psi: np.ndarray, levels: int):
    if s >= 1.0:
        energies = np.sort(pair.h_p)[:levels]
        probs = np.abs(psi) ** 2
        order = np.argsort(pair.h_p, kind="stable")[:levels]
        return energies, probs[order], float(probs[pair.ground_indices()].sum())
    values, vectors = _lowest_eigenpairs(pair, s, levels)
    overlaps = np.abs(vectors.conj().T @ psi) ** 2
    manifold = values <= values[0] + ENERGY_TOL
    return values[:levels], overlaps[:levels], float(overlaps[manifold].sum())


def evolve(
    pair: HamiltonianPair,
    t_f: float,
    steps: Optional[int] = None,
    n_records: int = 101,
    levels: int = DEFAULT_LEVELS,
    max_phase_per_step: float = 1.0,
) -> EvolutionTrajectory:
    """H_B 바닥 상태에서 출발해 s = t/t_f 로 시간 의존 슈뢰딩거 방정식 적분"""
    if not (t_f > 0.0):
        raise ArgumentError(f"어닐링 시간 t_f는 양수여야 합니다: {t_f}")
    n_records = max(2, int(n_records))
    levels = max(1, min(int(levels), pair.dim))
    needed = max(required_steps(pair, t_f, max_phase_per_step), n_records - 1)
    if steps is None:
        steps = needed
    elif steps < needed:
        raise AccuracyError(
            f"스텝 수 {steps}는 노름 허용오차를 보장하기에 부족합니다. 최소 {needed} 스텝 이상을 지정하거나 생략하세요."
        )

    h = t_f / steps
    center = 0.5 * float(pair.h_p.max() + pair.h_p.min())
    shifted = pair.h_p - center  # 전역 위상만 바뀜
    coef = h**3 / (12.0 * t_f)
    dense = pair.dim <= DENSE_EVOLVE_DIM
    if dense:
        h_b = pair.h_b.toarray()
        commutator = h_b * (pair.h_p[None, :] - pair.h_p[:, None])
    else:
        diag_p = sparse.diags(shifted)
        commutator = (pair.h_b @ diag_p - diag_p @ pair.h_b).tocsr()

    record_steps = np.unique(np.round(np.linspace(0, steps, n_records)).astype(int))
    psi = initial_state(pair).amplitudes.copy()
    s_rec, e_rec, p_rec, g_rec, norms = [], [], [], [], []

    def record(step: int) -> None:
        s = step / steps
        energies, occupations, ground = _record_occupations(pair, s, psi, levels)
        s_rec.append(s)
        e_rec.append(energies)
        p_rec.append(occupations)
        g_rec.append(ground)
        norms.append(float(np.linalg.norm(psi)))

    next_record = 0
    if record_steps[0] == 0:
        record(0)
        next_record = 1
    for step in range(1, steps + 1):
        s_mid = (step - 0.5) / steps
        if dense:
            generator = h * (1.0 - s_mid) * h_b
            generator[np.diag_indices(pair.dim)] += h * s_mid * shifted
            generator = generator + 1j * coef * commutator
            values, vectors = scipy.linalg.eigh(generator)
            psi = vectors @ (np.exp(-1j * values) * (vectors.conj().T @ psi))
        else:
            generator = h * ((1.0 - s_mid) * pair.h_b + s_mid * sparse.diags(shifted)) + 1j * coef * commutator
            psi = expm_multiply(-1j * generator.tocsc(), psi)
        if next_record < record_steps.size and step == record_steps[next_record]:
            record(step)
            next_record += 1

    drift = abs(np.linalg.norm(psi) - 1.0)
    if drift > NORM_TOL:
        raise AccuracyError(f"노름 드리프트 {drift:.2e} > {NORM_TOL}: 스텝 수를 늘리세요 (현재 {steps})")
    logger.debug(f"진화 완료: t_f={t_f}, steps={steps}, 최종 바닥 점유율={g_rec[-1]:.6f}")
    return EvolutionTrajectory(
        t_f=float(t_f),
        steps=int(steps),
        s=np.array(s_rec),
        energies=np.array(e_rec),
        occupations=np.array(p_rec),
        ground_occupation=np.array(g_rec),
        norms=np.array(norms),
        final_state=QuantumState(psi),
    )


def final_ground_occupation(pair: HamiltonianPair, state: QuantumState) -> float:
    return float(state.probabilities()[pair.ground_indices()].sum())


# =============================================================================
# 단열 지표
# =============================================================================


def adiabatic_metric(pair: HamiltonianPair, t_f: float, s_grid: Sequence[float]) -> float:
    """(1/t_f)·max_s max_{m≠0} |<0|H_P - H_B|m>| / |E_0 - E_m|"""
    if not (t_f > 0.0):
        raise ArgumentError(f"어닐링 시간 t_f는 양수여야 합니다: {t_f}")
    grid = _check_grid(s_grid)
    if pair.dim < 2:
        return 0.0
    worst = 0.0
    for s in grid:
        values, vectors = np.linalg.eigh(pair.dense_at(s))
        ground = vectors[:, 0]
        derivative_ground = pair.h_p * ground - pair.h_b @ ground
        numerators = np.abs(vectors[:, 1:].conj().T @ derivative_ground)
        gaps = np.abs(values[1:] - values[0])
        if gaps.min() < ENERGY_TOL:
            raise DegeneracyError(f"s={s:.6f}에서 바닥 준위가 축퇴되었습니다 (갭 {gaps.min():.2e})", s=float(s))
        worst = max(worst, float(np.max(numerators / gaps)))
    return worst / t_f


# =============================================================================
# 측정 / 스윕 / 출력 행
# =============================================================================


def measure(state: QuantumState, rng: np.random.Generator, n_s: int) -> np.ndarray:
    """σ3 기저 Born 규칙 측정 n_s회 (비트 배열 n_s×n)"""
    probs = state.probabilities()
    probs = probs / probs.sum()
    picks = rng.choice(probs.size, size=int(n_s), p=probs)
    return index_to_bits(picks, state.n)


def sweep_anneal_times(
    pair: HamiltonianPair, t_fs: Sequence[float], s_grid: Sequence[float], threads: Optional[int] = None
) -> List[Dict[str, float]]:
    """t_f별 최종 바닥 점유율과 단열 지표 (t_f 점은 병렬 실행)"""
    base_metric = adiabatic_metric(pair, 1.0, s_grid)

    def one(t_f: float) -> Dict[str, float]:
        trajectory = evolve(pair, float(t_f), n_records=2)
        return {
            "t_f": float(t_f),
            "final_ground_occupation": trajectory.final_ground_occupation,
            "adiabatic_metric": base_metric / float(t_f),
            "norm_drift": float(abs(trajectory.norms[-1] - 1.0)),
        }

    return ordered_map(one, list(t_fs), threads)


def trajectory_header(levels: int) -> List[str]:
    return ["s"] + [f"E_{l}" for l in range(levels)] + [f"P_{l}" for l in range(levels)]


def trajectory_rows(trajectory: EvolutionTrajectory) -> List[list]:
    return [
        [float(s)] + [float(e) for e in energies] + [float(p) for p in occ]
        for s, energies, occ in zip(trajectory.s, trajectory.energies, trajectory.occupations)
    ]
