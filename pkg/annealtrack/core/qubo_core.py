#!/usr/bin/env python3
# 파일명: qubo_core.py
# 설명: QUBO / Ising / 이진 정수계획(BILP) 표현, 상호 변환, 에너지 계산, 완전탐색
# 작성일: 2024
"""
QUBO 핵심 모듈

세 가지 문제 표현을 다룹니다.
- Qubo:       E(x) = x^T Q x + offset,   x ∈ {0,1}^n
- IsingModel: H(σ) = -σ^T J σ - μ h^T σ + offset,   σ ∈ {-1,+1}^n
- BinaryIlp:  min c^T x  s.t.  A x = b

x와 σ 사이의 대응은 σ = 2x - e 입니다 (x=1 ↔ σ=+1).
상태 번호(basis index)는 0번 사이트를 최상위 비트로 둡니다.
"""

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger
from typing_extensions import Literal

from ..errors import ArgumentError, SizeLimitError
from ..utils.parallel import thread_limit

# =============================================================================
# 상수
# =============================================================================

ENERGY_TOL = 1e-9  # 에너지 동일 판정 허용 오차
SYMMETRY_TOL = 1e-12  # 대칭 행렬 판정 허용 오차
MAX_BRUTE_FORCE_SITES = 24  # 완전탐색 최대 변수 개수
BRUTE_FORCE_CHUNK = 1 << 16  # 한 번에 평가하는 상태 개수

BitVector = Tuple[int, ...]
ProblemKind = Literal["qubo", "ising"]


def _as_square_matrix(name: str, value: Any) -> np.ndarray:
    matrix = np.array(value, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 1:
        raise ArgumentError(f"{name}는 n×n (n≥1) 정방행렬이어야 합니다: shape={matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise ArgumentError(f"{name}에 유한하지 않은 값이 있습니다")
    if not np.allclose(matrix, matrix.T, rtol=0.0, atol=SYMMETRY_TOL):
        raise ArgumentError(f"{name}는 대칭행렬이어야 합니다")
    matrix = 0.5 * (matrix + matrix.T)
    matrix.setflags(write=False)
    return matrix


# =============================================================================
# 문제 표현 데이터 클래스
# =============================================================================


@dataclass(frozen=True)
class Qubo:
    """E(x) = x^T Q x + offset (Q 대칭)"""

    Q: np.ndarray
    offset: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "Q", _as_square_matrix("Q", self.Q))
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def n(self) -> int:
        return int(self.Q.shape[0])


@dataclass(frozen=True)
class IsingModel:
    """H(σ) = -σ^T J σ - μ h^T σ + offset (J 대칭, 대각 성분 허용)"""

    J: np.ndarray
    h: np.ndarray
    mu: float = 1.0
    offset: float = 0.0

    def __post_init__(self):
        coupling = _as_square_matrix("J", self.J)
        field = np.array(self.h, dtype=float).reshape(-1)
        if field.shape[0] != coupling.shape[0]:
            raise ArgumentError(f"h 길이({field.shape[0]})가 J 크기({coupling.shape[0]})와 다릅니다")
        if not np.all(np.isfinite(field)):
            raise ArgumentError("h에 유한하지 않은 값이 있습니다")
        field.setflags(write=False)
        object.__setattr__(self, "J", coupling)
        object.__setattr__(self, "h", field)
        object.__setattr__(self, "mu", float(self.mu))
        object.__setattr__(self, "offset", float(self.offset))

    @property
    def n(self) -> int:
        return int(self.J.shape[0])

    @property
    def effective_field(self) -> np.ndarray:
        """μh"""
        return self.mu * self.h

    def max_coefficient(self) -> float:
        return float(max(np.max(np.abs(self.J)), np.max(np.abs(self.effective_field))))


@dataclass(frozen=True)
class BinaryIlp:
    """min c^T x  s.t.  A x = b,  x ∈ {0,1}^n"""

    A: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        a_matrix = np.atleast_2d(np.array(self.A, dtype=float))
        rhs = np.array(self.b, dtype=float).reshape(-1)
        cost = np.array(self.c, dtype=float).reshape(-1)
        if a_matrix.shape[0] != rhs.shape[0]:
            raise ArgumentError(f"A 행 개수({a_matrix.shape[0]})와 b 길이({rhs.shape[0]})가 다릅니다")
        if a_matrix.shape[1] != cost.shape[0]:
            raise ArgumentError(f"A 열 개수({a_matrix.shape[1]})와 c 길이({cost.shape[0]})가 다릅니다")
        object.__setattr__(self, "A", a_matrix)
        object.__setattr__(self, "b", rhs)
        object.__setattr__(self, "c", cost)

    @property
    def n(self) -> int:
        return int(self.c.shape[0])

    def objective(self, x: Sequence[int]) -> float:
        return float(self.c @ _as_bits(x, self.n))

    def is_satisfied(self, x: Sequence[int]) -> bool:
        return bool(np.allclose(self.A @ _as_bits(x, self.n), self.b))


# =============================================================================
# 비트 / 스핀 변환 도우미
# =============================================================================


def _as_bits(x: Sequence[int], n: int) -> np.ndarray:
    bits = np.asarray(x)
    if bits.shape != (n,):
        raise ArgumentError(f"비트 벡터 길이는 {n}이어야 합니다: {bits.shape}")
    if not np.all((bits == 0) | (bits == 1)):
        raise ArgumentError("비트 벡터 원소는 0 또는 1이어야 합니다")
    return bits.astype(float)


def _as_spins(sigma: Sequence[int], n: int) -> np.ndarray:
    spins = np.asarray(sigma)
    if spins.shape != (n,):
        raise ArgumentError(f"스핀 벡터 길이는 {n}이어야 합니다: {spins.shape}")
    if not np.all((spins == 1) | (spins == -1)):
        raise ArgumentError("스핀 원소는 -1 또는 +1이어야 합니다")
    return spins.astype(float)


def bits_to_spins(x: Sequence[int]) -> np.ndarray:
    return 2 * np.asarray(x, dtype=int) - 1


def spins_to_bits(sigma: Sequence[int]) -> np.ndarray:
    return (np.asarray(sigma, dtype=int) + 1) // 2


def index_to_bits(indices: Union[int, np.ndarray], n: int) -> np.ndarray:
    """상태 번호 → 비트 배열 (0번 사이트가 최상위 비트)"""
    idx = np.asarray(indices, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((idx[..., None] >> shifts) & 1).astype(np.int8)


def bits_to_index(x: Sequence[int]) -> int:
    value = 0
    for bit in x:
        value = (value << 1) | int(bit)
    return value


def bitstring(x: Sequence[int]) -> str:
    return "".join(str(int(b)) for b in x)


# =============================================================================
# 에너지 계산
# =============================================================================


def qubo_energy(q: Qubo, x: Sequence[int]) -> float:
    bits = _as_bits(x, q.n)
    return float(bits @ q.Q @ bits + q.offset)


def qubo_energies(q: Qubo, states: np.ndarray) -> np.ndarray:
    """여러 상태(k×n)의 QUBO 에너지를 한 번에 계산"""
    bits = np.asarray(states, dtype=float)
    return np.einsum("ij,jk,ik->i", bits, q.Q, bits) + q.offset


def ising_energy(m: IsingModel, sigma: Sequence[int]) -> float:
    spins = _as_spins(sigma, m.n)
    return float(-(spins @ m.J @ spins) - m.effective_field @ spins + m.offset)


def ising_energies(m: IsingModel, spins: np.ndarray) -> np.ndarray:
    """여러 스핀 배열(k×n)의 Ising 에너지"""
    s = np.asarray(spins, dtype=float)
    return -np.einsum("ij,jk,ik->i", s, m.J, s) - s @ m.effective_field + m.offset


def all_ising_energies(m: IsingModel) -> np.ndarray:
    """상태 번호 순서의 2^n 에너지 벡터 (σ3 기저 대각 성분)"""
    if m.n > MAX_BRUTE_FORCE_SITES:
        raise SizeLimitError(f"n={m.n} > {MAX_BRUTE_FORCE_SITES}: 전체 에너지 열거 불가")
    return all_qubo_energies(ising_to_qubo(m))


def all_qubo_energies(q: Qubo) -> np.ndarray:
    if q.n > MAX_BRUTE_FORCE_SITES:
        raise SizeLimitError(f"n={q.n} > {MAX_BRUTE_FORCE_SITES}: 전체 에너지 열거 불가")
    total = 1 << q.n
    out = np.empty(total, dtype=float)
    for start in range(0, total, BRUTE_FORCE_CHUNK):
        stop = min(total, start + BRUTE_FORCE_CHUNK)
        out[start:stop] = qubo_energies(q, index_to_bits(np.arange(start, stop), q.n))
    return out


# =============================================================================
# 표현 변환
# =============================================================================


def ising_to_qubo(m: IsingModel) -> Qubo:
    """σ = 2x - e 대입; 떨어져 나가는 상수 μh^T e - e^T J e는 offset에 보존"""
    ones = np.ones(m.n)
    je = m.J @ ones
    mu_h = m.effective_field
    q_matrix = -4.0 * m.J + np.diag(4.0 * je - 2.0 * mu_h)
    offset = m.offset + float(mu_h @ ones) - float(ones @ je)
    return Qubo(q_matrix, offset)


def qubo_to_ising(q: Qubo) -> IsingModel:
    """x = (σ + e)/2 대입 (μ = 1)"""
    ones = np.ones(q.n)
    qe = q.Q @ ones
    coupling = -0.25 * q.Q
    field = -0.5 * qe
    offset = q.offset + 0.25 * float(ones @ qe)
    return IsingModel(coupling, field, 1.0, offset)


def ilp_to_qubo(p: BinaryIlp, w: Union[float, Sequence[float]]) -> Qubo:
    """등식 제약을 제곱 페널티로 흡수: c^T x + Σ_j w_j (A_j x - b_j)^2"""
    weights = np.broadcast_to(np.asarray(w, dtype=float), p.b.shape).copy()
    if np.any(weights <= 0) or not np.all(np.isfinite(weights)):
        raise ArgumentError("페널티 가중치 w는 양수여야 합니다")
    q_matrix = np.diag(p.c).astype(float)
    for row, rhs, weight in zip(p.A, p.b, weights):
        q_matrix += weight * (np.outer(row, row) - 2.0 * np.diag(rhs * row))
    offset = float(np.sum(weights * p.b**2))
    return Qubo(q_matrix, offset)


# =============================================================================
# 완전탐색
# =============================================================================


def _scan_chunk(q: Qubo, start: int, stop: int, tol: float) -> Tuple[float, np.ndarray, np.ndarray]:
    indices = np.arange(start, stop, dtype=np.int64)
    energies = qubo_energies(q, index_to_bits(indices, q.n))
    chunk_min = float(energies.min())
    keep = energies <= chunk_min + tol
    return chunk_min, indices[keep], energies[keep]


def brute_force_solve(
    q: Qubo, tol: float = ENERGY_TOL, max_workers: Optional[int] = None
) -> Tuple[float, List[BitVector]]:
    """최소 에너지와 모든 최소 상태(상태 번호 순)를 반환"""
    if q.n > MAX_BRUTE_FORCE_SITES:
        raise SizeLimitError(f"n={q.n} > {MAX_BRUTE_FORCE_SITES}: 완전탐색 한계 초과")
    total = 1 << q.n
    bounds = [(s, min(total, s + BRUTE_FORCE_CHUNK)) for s in range(0, total, BRUTE_FORCE_CHUNK)]

    workers = min(thread_limit(max_workers), len(bounds))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda b: _scan_chunk(q, b[0], b[1], tol), bounds))
    else:
        parts = [_scan_chunk(q, start, stop, tol) for start, stop in bounds]

    e0 = min(part[0] for part in parts)
    winners: List[int] = []
    for _, indices, energies in parts:
        winners.extend(int(i) for i in indices[energies <= e0 + tol])
    states = [tuple(int(b) for b in index_to_bits(i, q.n)) for i in sorted(winners)]
    logger.debug(f"완전탐색 완료: n={q.n}, E0={e0:.6f}, 최소 상태 {len(states)}개")
    return e0, states


# =============================================================================
# JSON 직렬화
# =============================================================================


def problem_to_dict(problem: Union[Qubo, IsingModel], labels: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """
    문제 JSON 객체 생성

    qubo: quadratic은 i<j 항 (Q_ij = Q_ji = v), linear는 대각 성분
    ising: quadratic은 i≤j 의 J_ij, linear는 h, mu 키 포함
    """
    if isinstance(problem, Qubo):
        matrix, linear, kind = problem.Q, np.diag(problem.Q), "qubo"
        pairs = [(i, j) for i in range(problem.n) for j in range(i + 1, problem.n)]
    elif isinstance(problem, IsingModel):
        matrix, linear, kind = problem.J, problem.h, "ising"
        pairs = [(i, j) for i in range(problem.n) for j in range(i, problem.n)]
    else:
        raise ArgumentError(f"직렬화할 수 없는 문제 형식: {type(problem).__name__}")

    payload: Dict[str, Any] = {
        "kind": kind,
        "n": problem.n,
        "quadratic": [[i, j, float(matrix[i, j])] for i, j in pairs if matrix[i, j] != 0.0],
        "linear": [float(v) for v in linear],
        "offset": float(problem.offset),
    }
    if isinstance(problem, IsingModel):
        payload["mu"] = problem.mu
    if labels is not None:
        payload["labels"] = labels
    return payload


def problem_from_dict(payload: Dict[str, Any]) -> Union[Qubo, IsingModel]:
    kind = payload.get("kind")
    try:
        n = int(payload["n"])
        matrix = np.zeros((n, n))
        for i, j, value in payload.get("quadratic", []):
            matrix[int(i), int(j)] = float(value)
            matrix[int(j), int(i)] = float(value)
        linear = np.array(payload.get("linear", [0.0] * n), dtype=float)
        offset = float(payload.get("offset", 0.0))
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ArgumentError(f"문제 JSON 형식 오류: {exc}") from exc

    if kind == "qubo":
        matrix[np.diag_indices(n)] = linear
        return Qubo(matrix, offset)
    if kind == "ising":
        return IsingModel(matrix, linear, float(payload.get("mu", 1.0)), offset)
    raise ArgumentError(f"알 수 없는 문제 종류: {kind!r}")


def dumps_problem(problem: Union[Qubo, IsingModel], labels: Optional[Dict[str, Any]] = None) -> str:
    return json.dumps(problem_to_dict(problem, labels), indent=2, sort_keys=True) + "\n"
