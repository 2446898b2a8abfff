#!/usr/bin/env python3
# 파일명: tracking/__init__.py
# 설명: 표적 추적 모델 / 연관 비용 모듈 패키지 초기화
# 작성일: 2024
"""
표적 추적 모듈들

- tracking_model: 운동 모델, 칼만 예측, 측정 시뮬레이션
- assoc_cost: 연관 비용 행렬, 실행 가능성, 연관 우도
- hybrid_jpda: 샘플 기반 JPDA 재귀 (annealtrack.tracking.hybrid_jpda 에서 직접 임포트)
"""

from .tracking_model import (
    TargetState,
    ScenarioParams,
    Scan,
    motion_matrices,
    predict,
    init_targets,
    propagate_truth,
    simulate_scan,
    simulate_scenario,
)
from .assoc_cost import (
    Innovation,
    CostMatrix,
    AssociationMatrix,
    innovation,
    gamma_term,
    build_cost_matrix,
    association_likelihood,
    is_feasible,
    enumerate_feasible,
)

__all__ = [
    "TargetState",
    "ScenarioParams",
    "Scan",
    "motion_matrices",
    "predict",
    "init_targets",
    "propagate_truth",
    "simulate_scan",
    "simulate_scenario",
    "Innovation",
    "CostMatrix",
    "AssociationMatrix",
    "innovation",
    "gamma_term",
    "build_cost_matrix",
    "association_likelihood",
    "is_feasible",
    "enumerate_feasible",
]
