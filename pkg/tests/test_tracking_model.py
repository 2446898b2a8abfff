#!/usr/bin/env python3
# 파일명: test_tracking_model.py
# 설명: 등속 운동 모델, 예측, 측정 시뮬레이션 테스트
# 작성일: 2024

import numpy as np
import pytest

from annealtrack.errors import ArgumentError
from annealtrack.tracking.tracking_model import (
    Scan,
    ScenarioParams,
    TargetState,
    init_targets,
    motion_matrices,
    predict,
    propagate_truth,
    scenario_predictions,
    simulate_scan,
    simulate_scenario,
)


# =============================================================================
# 파라미터 / 데이터 클래스
# =============================================================================


@pytest.mark.parametrize(
    "overrides",
    [
        {"n_targets": 0},
        {"p_d": 0.0},
        {"p_d": 1.0},
        {"clutter_rate": -0.5},
        {"sigma_m2": 0.0},
        {"sigma_p2": -1.0},
        {"fov": (10.0, 10.0)},
    ],
)
def test_invalid_scenario_params(overrides):
    with pytest.raises(ArgumentError):
        ScenarioParams(**overrides)


def test_default_params():
    p = ScenarioParams()
    assert p.fov_length == 100.0
    assert np.allclose(p.p0, 0.1 * np.eye(2))


def test_target_state_rejects_indefinite_cov():
    with pytest.raises(ArgumentError):
        TargetState(np.zeros(2), np.array([[1.0, 0.0], [0.0, -1.0]]))


def test_target_state_rejects_bad_shape():
    with pytest.raises(ArgumentError):
        TargetState(np.zeros(3), np.eye(2))


def test_scan_time_and_outside():
    scan = Scan(3, (5.0, -2.0, 120.0))
    assert scan.m == 3
    assert scan.time(2.0) == 6.0
    assert scan.outside((0.0, 100.0)) == [-2.0, 120.0]


# =============================================================================
# 운동 모델 / 예측
# =============================================================================


def test_motion_matrices_unit_step():
    transition, process = motion_matrices(ScenarioParams(dt=1.0, sigma_p2=1.0))
    assert np.allclose(transition, [[1.0, 1.0], [0.0, 1.0]])
    assert np.allclose(process, [[1.0 / 3.0, 0.5], [0.5, 1.0]])


def test_motion_matrices_reject_nonpositive_dt():
    with pytest.raises(ArgumentError):
        motion_matrices(ScenarioParams(dt=0.0))


def test_predict_matches_closed_form():
    p = ScenarioParams()
    transition, process = motion_matrices(p)
    state = TargetState(np.array([1.0, 2.0]), p.p0)
    predicted = predict(state, transition, process)
    assert np.allclose(predicted.mean, [3.0, 2.0])
    assert np.allclose(predicted.cov, transition @ p.p0 @ transition.T + process)
    assert predicted.cov[0, 0] + p.sigma_m2 == pytest.approx(0.6333333333, abs=1e-9)


def test_init_targets_layout():
    targets = init_targets(ScenarioParams(n_targets=3))
    assert [list(t.mean) for t in targets] == [[0.0, 0.0], [1.0, 2.0], [2.0, 4.0]]


def test_propagate_deterministic():
    transition, process = motion_matrices(ScenarioParams())
    x = np.array([2.0, 4.0])
    out = propagate_truth(x, transition, process, np.random.default_rng(0), stochastic=False)
    assert np.allclose(out, transition @ x)


def test_propagate_without_process_noise_ignores_randomness():
    transition, process = motion_matrices(ScenarioParams(sigma_p2=0.0))
    x = np.array([1.0, -1.0])
    out = propagate_truth(x, transition, process, np.random.default_rng(0), stochastic=True)
    assert np.allclose(out, [0.0, -1.0])


def test_propagate_stochastic_mean(rng):
    transition, process = motion_matrices(ScenarioParams())
    x = np.array([1.0, 2.0])
    draws = np.array([propagate_truth(x, transition, process, rng, stochastic=True) for _ in range(10_000)])
    spread = np.sqrt(np.diag(process))
    assert np.all(np.abs(draws.mean(axis=0) - transition @ x) < 4.0 * spread / 100.0)


# =============================================================================
# 측정 시뮬레이션
# =============================================================================


def test_scan_without_detection_or_clutter_is_empty(rng):
    p = ScenarioParams(clutter_rate=0.0)
    scan = simulate_scan([np.array([1.0, 0.0])] * 3, p, rng, k=1, p_d=0.0)
    assert scan.m == 0


def test_certain_detection_without_clutter(rng):
    p = ScenarioParams(clutter_rate=0.0)
    truth = [np.array([0.0, 0.0]), np.array([10.0, 0.0]), np.array([20.0, 0.0])]
    scan = simulate_scan(truth, p, rng, k=1, p_d=1.0)
    assert scan.m == 3
    assert sorted(scan.origins) == [1, 2, 3]
    for value, origin in zip(scan.measurements, scan.origins):
        assert abs(value - truth[origin - 1][0]) < 5.0 * np.sqrt(p.sigma_m2)


def test_clutter_count_mean(rng):
    p = ScenarioParams(n_targets=1, clutter_rate=1.0)
    counts = [
        simulate_scan([np.array([0.0, 0.0])], p, rng, p_d=0.0).m
        for _ in range(10_000)
    ]
    assert abs(np.mean(counts) - 1.0) < 0.05


def test_clutter_stays_inside_fov(rng):
    p = ScenarioParams(clutter_rate=5.0, fov=(-10.0, 10.0))
    scan = simulate_scan([np.array([0.0, 0.0])], p, rng, p_d=0.0)
    assert all(-10.0 <= y <= 10.0 for y in scan.measurements)
    assert set(scan.origins) <= {0}


def test_scenario_is_seeded():
    p = ScenarioParams(seed=42)
    first = simulate_scenario(p, 4)[1]
    second = simulate_scenario(p, 4)[1]
    assert [s.measurements for s in first] == [s.measurements for s in second]


def test_deterministic_truth_history():
    history, scans = simulate_scenario(ScenarioParams(), 3)
    assert len(history) == 4 and len(scans) == 3
    assert [float(x[0]) for x in history[3]] == [0.0, 7.0, 14.0]
    assert [s.k for s in scans] == [1, 2, 3]


def test_fixed_scans_replace_simulation():
    p = ScenarioParams(fixed_scans={2: (1.5, 4.5)})
    _, scans = simulate_scenario(p, 3)
    assert scans[1].measurements == (1.5, 4.5)
    assert scans[1].origins == ()


def test_scenario_predictions_center_on_truth():
    p = ScenarioParams(n_targets=2)
    preds = scenario_predictions(p, [np.array([0.0, 0.0]), np.array([1.0, 2.0])])
    assert np.allclose(preds[1].mean, [3.0, 2.0])
    assert preds[0].cov[0, 0] == pytest.approx(0.1 + 0.1 + 1.0 / 3.0)
