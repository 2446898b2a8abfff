#!/usr/bin/env python3
# 파일명: core/__init__.py
# 설명: QUBO / Ising 핵심 모듈 패키지 초기화
# 작성일: 2024
"""
문제 표현 핵심 모듈

- QUBO, Ising, 이진 정수계획 데이터 클래스
- 상호 변환 및 에너지 계산
- 완전탐색 (n ≤ 24)
"""

from .qubo_core import (
    Qubo,
    IsingModel,
    BinaryIlp,
    qubo_energy,
    qubo_energies,
    ising_energy,
    ising_energies,
    all_ising_energies,
    ising_to_qubo,
    qubo_to_ising,
    ilp_to_qubo,
    brute_force_solve,
    problem_to_dict,
    problem_from_dict,
)

__all__ = [
    "Qubo",
    "IsingModel",
    "BinaryIlp",
    "qubo_energy",
    "qubo_energies",
    "ising_energy",
    "ising_energies",
    "all_ising_energies",
    "ising_to_qubo",
    "qubo_to_ising",
    "ilp_to_qubo",
    "brute_force_solve",
    "problem_to_dict",
    "problem_from_dict",
]
