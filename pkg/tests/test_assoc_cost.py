#!/usr/bin/env python3
# 파일명: test_assoc_cost.py
# 설명: 비용 행렬, 연관 우도, 실행 가능 연관 열거 테스트
# 작성일: 2024

import math
import warnings

import numpy as np
import pytest
from scipy.stats import norm

from annealtrack.errors import ArgumentError, FeasibilityError
from annealtrack.tracking.assoc_cost import (
    AssociationMatrix,
    Innovation,
    association_cost,
    association_likelihood,
    association_log_likelihood,
    all_missed,
    build_cost_matrix,
    count_feasible,
    enumerate_feasible,
    gamma_term,
    innovation,
    is_feasible,
)
from annealtrack.tracking.tracking_model import Scan, ScenarioParams, TargetState


def spread_predictions(positions, var=0.5):
    return [TargetState(np.array([x, 0.0]), var * np.eye(2)) for x in positions]


# =============================================================================
# 비용 항
# =============================================================================


def test_innovation_variance(origin_prediction):
    inn = innovation(origin_prediction, 0.2, 0.1)
    assert inn.d == pytest.approx(0.2)
    assert inn.s == pytest.approx(0.6333333333, abs=1e-9)


def test_innovation_emits_no_numpy_warning(origin_prediction):
    with warnings.catch_warnings():
        warnings.simplefilter("error", DeprecationWarning)
        inn = innovation(origin_prediction, -1.5, 0.1)
    assert isinstance(inn.d, float) and isinstance(inn.s, float)


def test_gamma_term_at_zero_residual():
    assert gamma_term(Innovation(0.0, 0.1)) == pytest.approx(-0.2323540, abs=1e-6)


def test_gamma_term_is_negative_gaussian_log_density(rng):
    for _ in range(20):
        root = rng.normal(size=(2, 2))
        pred = TargetState(rng.normal(scale=5.0, size=2), root @ root.T + 0.01 * np.eye(2))
        y = rng.normal(scale=5.0)
        sigma_m2 = rng.uniform(0.01, 2.0)
        expected = -norm.logpdf(y, loc=pred.mean[0], scale=math.sqrt(pred.cov[0, 0] + sigma_m2))
        assert gamma_term(innovation(pred, y, sigma_m2)) == pytest.approx(expected, rel=1e-10, abs=1e-10)


def test_innovation_rejects_nonpositive_variance():
    with pytest.raises(ArgumentError):
        Innovation(0.0, 0.0)


def test_default_cost_matrix_entries(origin_prediction, one_by_two_scan, one_target_params):
    cost = build_cost_matrix([origin_prediction], one_by_two_scan, one_target_params)
    assert cost.gamma.shape == (2, 3)
    assert np.allclose(cost.gamma[:, 0], -math.log(0.05))
    assert np.allclose(cost.gamma[0, 1:], math.log(100.0))
    expected = -math.log(0.95) + gamma_term(innovation(origin_prediction, 2.5, 0.1))
    assert cost.gamma[1, 2] == pytest.approx(expected)


def test_cost_matrix_without_measurements(one_target_params, origin_prediction):
    cost = build_cost_matrix([origin_prediction], Scan(1, ()), one_target_params)
    assert cost.gamma.shape == (2, 1)
    assert cost.n_measurements == 0


def test_zero_clutter_rate_with_measurements_is_rejected(origin_prediction):
    p = ScenarioParams(n_targets=1, clutter_rate=0.0)
    with pytest.raises(ArgumentError):
        build_cost_matrix([origin_prediction], Scan(1, (0.5,)), p)


def test_cost_csv_layout(origin_prediction, one_by_two_scan, one_target_params):
    cost = build_cost_matrix([origin_prediction], one_by_two_scan, one_target_params)
    assert cost.csv_header() == ["i\\j", "0", "1", "2"]
    rows = cost.to_csv_rows()
    assert [row[0] for row in rows] == [0, 1]
    assert rows[1][1:] == pytest.approx(list(cost.gamma[1]))


# =============================================================================
# 우도
# =============================================================================


def test_single_target_missed_without_measurements():
    p = ScenarioParams(n_targets=1)
    preds = spread_predictions([0.0])
    S = all_missed(1, 0)
    assert association_likelihood(S, preds, Scan(1, ()), p) == pytest.approx(0.05)


def test_single_target_missed_with_clutter():
    p = ScenarioParams(n_targets=1)
    preds = spread_predictions([0.0])
    S = all_missed(1, 1)
    assert association_likelihood(S, preds, Scan(1, (40.0,)), p) == pytest.approx(0.0005)


@pytest.mark.parametrize("n,m", [(1, 1), (1, 3), (2, 2), (3, 1), (3, 3)])
def test_negative_log_likelihood_equals_cost(n, m):
    p = ScenarioParams(n_targets=n)
    preds = spread_predictions([3.0 * i for i in range(n)])
    scan = Scan(1, tuple(0.7 + 2.9 * j for j in range(m)))
    cost = build_cost_matrix(preds, scan, p)
    for S in enumerate_feasible(n, m):
        loglik = association_log_likelihood(S, preds, scan, p)
        assert -loglik == pytest.approx(association_cost(S, cost), abs=1e-9)


def test_infeasible_likelihood_raises():
    p = ScenarioParams(n_targets=1)
    S = AssociationMatrix(np.array([[0, 1], [0, 1]]))
    with pytest.raises(FeasibilityError):
        association_log_likelihood(S, spread_predictions([0.0]), Scan(1, (0.0,)), p)


def test_likelihood_shape_mismatch_raises():
    p = ScenarioParams(n_targets=2)
    with pytest.raises(ArgumentError):
        association_log_likelihood(all_missed(1, 1), spread_predictions([0.0, 1.0]), Scan(1, (0.0,)), p)


def test_cost_ignores_origin_cell(origin_prediction, one_by_two_scan, one_target_params):
    cost = build_cost_matrix([origin_prediction], one_by_two_scan, one_target_params)
    plain = np.array([[0, 0, 1], [0, 1, 0]])
    marked = plain.copy()
    marked[0, 0] = 1
    assert association_cost(AssociationMatrix(plain), cost) == association_cost(AssociationMatrix(marked), cost)


# =============================================================================
# 실행 가능 연관
# =============================================================================


def test_example_association_is_feasible():
    S = AssociationMatrix(np.array([[0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1]]))
    assert is_feasible(S)
    assert S.n_detections == 2
    assert S.assignment() == [1, 0, 3]


def test_double_assignment_is_infeasible():
    S = AssociationMatrix(np.array([[0, 0, 0], [0, 1, 1]]))
    assert not is_feasible(S)


def test_origin_cell_does_not_change_identity():
    base = np.array([[0, 1], [1, 0]])
    marked = base.copy()
    marked[0, 0] = 1
    assert AssociationMatrix(base) == AssociationMatrix(marked)
    assert len({AssociationMatrix(base), AssociationMatrix(marked)}) == 1


@pytest.mark.parametrize("n,m,expected", [(1, 0, 1), (1, 1, 2), (2, 2, 7), (3, 3, 34), (4, 4, 209)])
def test_count_feasible(n, m, expected):
    assert count_feasible(n, m) == expected


@pytest.mark.parametrize("n,m", [(1, 2), (2, 3), (3, 2), (3, 3)])
def test_enumeration_matches_count(n, m):
    matrices = list(enumerate_feasible(n, m))
    assert len(matrices) == count_feasible(n, m)
    assert len(set(matrices)) == len(matrices)
    assert all(is_feasible(S) for S in matrices)


def test_all_missed_is_feasible():
    S = all_missed(2, 3)
    assert is_feasible(S)
    assert S.n_detections == 0
