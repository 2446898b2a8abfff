#!/usr/bin/env python3
# 파일명: tracking_controller.py
# 설명: 다중 스캔 추적 재귀를 실행하는 메인 컨트롤러 클래스
# 작성일: 2024
"""
다중 표적 추적 메인 컨트롤러
- 시나리오 생성 (실제 궤적 + 측정)
- 스캔별 하이브리드 JPDA 재귀 실행
- 스캔별 기록 및 성능 통계
"""

import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

from loguru import logger

from ..solvers.samplers import AnnealParams
from ..tracking.hybrid_jpda import DEFAULT_TOP_K, StepDiagnostics, recursion_step, track_record
from ..tracking.tracking_model import Scan, ScenarioParams, TargetState, init_targets, simulate_scenario
from ..problems.problem_builders import DEFAULT_C, DEFAULT_C_TILDE


class TrackerMode(Enum):
    """추적기 상태 열거형"""

    IDLE = "idle"  # 대기
    TRACKING = "tracking"  # 재귀 실행 중
    FINISHED = "finished"  # 모든 스캔 처리 완료


@dataclass
class ScanOutcome:
    """스캔 하나의 처리 결과"""

    scan: Scan
    updated: List[TargetState]
    diagnostics: StepDiagnostics
    hard_matches_truth: Optional[bool]  # 측정 발생원이 알려진 경우에만
    elapsed: float


class TrackingController:
    """하이브리드 JPDA 추적 메인 컨트롤러 클래스"""

    def __init__(
        self,
        scenario: ScenarioParams,
        anneal: AnnealParams,
        c: float = DEFAULT_C,
        c_tilde: float = DEFAULT_C_TILDE,
        top_k: int = DEFAULT_TOP_K,
    ):
        self.scenario = scenario
        self.anneal = anneal
        self.c = c
        self.c_tilde = c_tilde
        self.top_k = top_k

        # 상태 관리
        self.current_mode = TrackerMode.IDLE
        self.states: List[TargetState] = []
        self.outcomes: List[ScanOutcome] = []

        # 성능 모니터링
        self.scan_count = 0
        self.fallback_count = 0
        self.start_time = 0.0
        self.elapsed_total = 0.0

    def initialize(self) -> List[TargetState]:
        """초기 표적 상태 (사전 분포) 설정"""
        self.states = init_targets(self.scenario)
        self.outcomes = []
        self.scan_count = 0
        self.fallback_count = 0
        self.current_mode = TrackerMode.IDLE
        logger.info(f"추적기 초기화: 표적 {len(self.states)}개, 백엔드 {self.anneal.backend.value}")
        return self.states

    def process_scan(self, scan: Scan) -> ScanOutcome:
        """스캔 하나에 대해 재귀 한 단계 실행"""
        if not self.states:
            self.initialize()
        self.current_mode = TrackerMode.TRACKING
        started = time.time()
        # 스캔마다 시드를 바꿔 런끼리 독립
        params = AnnealParams(
            self.anneal.n_s,
            self.anneal.t_f,
            self.anneal.seed + scan.k,
            self.anneal.backend,
            self.anneal.sweeps_per_us,
            self.anneal.t_cold,
            self.anneal.threads,
        )
        updated, diagnostics = recursion_step(
            self.states, scan, self.scenario, params, self.c, self.c_tilde, self.top_k
        )
        elapsed = time.time() - started

        outcome = ScanOutcome(scan, updated, diagnostics, self._check_truth(scan, diagnostics), elapsed)
        self.states = updated
        self.outcomes.append(outcome)
        self.scan_count += 1
        self.elapsed_total += elapsed
        if diagnostics.fell_back:
            self.fallback_count += 1
        logger.info(f"스캔 {scan.k}: 측정 {scan.m}개, Ê0={diagnostics.e_hat0}, 처리 {elapsed:.2f}초")
        return outcome

    def run(self, scans: Sequence[Scan]) -> List[ScanOutcome]:
        """스캔 목록 전체를 순서대로 처리"""
        self.start_time = time.time()
        for scan in scans:
            self.process_scan(scan)
        self.current_mode = TrackerMode.FINISHED
        return self.outcomes

    def run_scenario(self, n_scans: int) -> List[ScanOutcome]:
        """시나리오로부터 스캔 1..n_scans 생성 후 처리"""
        _, scans = simulate_scenario(self.scenario, n_scans)
        self.initialize()
        return self.run(scans)

    @staticmethod
    def _check_truth(scan: Scan, diagnostics: StepDiagnostics) -> Optional[bool]:
        hard = diagnostics.hard_assignment
        if not scan.origins or hard is None:
            return None
        for j, origin in enumerate(scan.origins, start=1):
            if hard.S[origin, j] != 1:
                return False
        return True

    def records(self) -> List[Dict[str, Any]]:
        """JSON-lines 출력용 레코드"""
        rows = []
        for outcome in self.outcomes:
            record = track_record(outcome.diagnostics, outcome.updated)
            record["hard_matches_truth"] = outcome.hard_matches_truth
            rows.append(record)
        return rows

    def get_performance_stats(self) -> Dict[str, Any]:
        """성능 통계 반환"""
        if self.start_time == 0:
            return {}

        checked = [o.hard_matches_truth for o in self.outcomes if o.hard_matches_truth is not None]
        return {
            "runtime_seconds": self.elapsed_total,
            "total_scans": self.scan_count,
            "average_scan_seconds": self.elapsed_total / self.scan_count if self.scan_count else 0.0,
            "fallback_scans": self.fallback_count,
            "hard_assignment_accuracy": sum(checked) / len(checked) if checked else None,
            "current_mode": self.current_mode.value,
        }

    def print_status(self) -> None:
        """현재 상태 출력"""
        stats = self.get_performance_stats()
        print("\n=== 추적기 상태 ===")
        print(f"모드: {self.current_mode.value}")
        print(f"백엔드: {self.anneal.backend.value} (샷 {self.anneal.n_s}, t_f {self.anneal.t_f}μs)")
        if stats:
            print(f"처리 스캔 수: {stats['total_scans']}")
            print(f"총 처리 시간: {stats['runtime_seconds']:.2f}초")
            print(f"미검출 대체 스캔 수: {stats['fallback_scans']}")
            accuracy = stats["hard_assignment_accuracy"]
            if accuracy is not None:
                print(f"하드 할당 정답률: {accuracy * 100:.1f}%")
        for state_index, state in enumerate(self.states, start=1):
            print(f"  표적 {state_index}: 위치 {state.mean[0]:8.3f} m, 속도 {state.mean[1]:7.3f} m/s")
