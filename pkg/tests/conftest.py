#!/usr/bin/env python3
# 파일명: conftest.py
# 설명: 테스트 공용 픽스처 (시드 고정 난수, 기준 시나리오, 작은 문제)
# 작성일: 2024

import numpy as np
import pytest

from annealtrack.core.qubo_core import IsingModel
from annealtrack.tracking.assoc_cost import build_cost_matrix
from annealtrack.tracking.tracking_model import (
    Scan,
    ScenarioParams,
    TargetState,
    motion_matrices,
    predict,
)
from annealtrack.problems.problem_builders import mtda_ising


@pytest.fixture
def rng():
    return np.random.default_rng(20240501)


@pytest.fixture
def default_params():
    """기본 시나리오 (p_d=0.95, λ=1, FoV=[0,100])"""
    return ScenarioParams()


@pytest.fixture
def one_target_params():
    return ScenarioParams(n_targets=1)


@pytest.fixture
def origin_prediction(one_target_params):
    """원점 정지 표적의 1스텝 예측 (S_k ≈ 0.6333)"""
    transition, process = motion_matrices(one_target_params)
    return predict(TargetState(np.zeros(2), one_target_params.p0), transition, process)


@pytest.fixture
def one_by_two_scan():
    return Scan(1, (0.2, 2.5))


@pytest.fixture
def one_by_two_model(origin_prediction, one_by_two_scan, one_target_params):
    """1표적 / 2측정 MTDA 모델 (6 큐비트)"""
    cost = build_cost_matrix([origin_prediction], one_by_two_scan, one_target_params)
    return mtda_ising(cost)


@pytest.fixture
def random_ising():
    """시드 고정 임의 Ising 모델 생성기"""

    def make(n, seed=0, mu=1.0, offset=0.0):
        gen = np.random.default_rng(seed)
        coupling = gen.normal(size=(n, n))
        return IsingModel(0.5 * (coupling + coupling.T), gen.normal(size=n), mu, offset)

    return make
