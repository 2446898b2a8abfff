#!/usr/bin/env python3
# 파일명: solvers/__init__.py
# 설명: 샘플러 / 단열 시뮬레이터 모듈 패키지 초기화
# 작성일: 2024
"""
풀이 모듈들

이 패키지는 다음 기능들을 제공합니다:
- 샷/런 샘플링 (exact, sa, adiabatic, exhaustive)
- 상태벡터 단열 진화, 스펙트럼, 단열 지표
"""

from .samplers import AnnealParams, Backend, RunResult, Shot, run, run_many
from .adiabatic_sim import HamiltonianPair, QuantumState, build_pair, spectrum, evolve, measure

__all__ = [
    "AnnealParams",
    "Backend",
    "RunResult",
    "Shot",
    "run",
    "run_many",
    "HamiltonianPair",
    "QuantumState",
    "build_pair",
    "spectrum",
    "evolve",
    "measure",
]
