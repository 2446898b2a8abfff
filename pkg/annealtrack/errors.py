#!/usr/bin/env python3
# 파일명: errors.py
# 설명: annealtrack 예외 계층 및 CLI 종료 코드 정의
# 작성일: 2024
"""
annealtrack 예외 계층

모든 예외는 AnnealTrackError를 상속하며, CLI는 exit_code 값을
그대로 프로세스 종료 코드로 사용합니다.

- 2: 잘못된 인자 (사용법 오류)
- 3: 크기 제한 / 가드 위반
- 4: 수치 정확도 문제
"""


class AnnealTrackError(Exception):
    """annealtrack 기본 예외"""

    exit_code = 1


class ArgumentError(AnnealTrackError, ValueError):
    """파라미터 범위/형태 오류"""

    exit_code = 2


class SizeLimitError(AnnealTrackError):
    """문제 크기가 백엔드 한계를 초과"""

    exit_code = 3


class FeasibilityError(AnnealTrackError, ValueError):
    """연관 행렬이 실행 가능(feasible) 조건을 만족하지 않음"""

    exit_code = 3


class EmptyPosteriorError(AnnealTrackError):
    """샘플 중 실행 가능한 연관이 하나도 없음"""

    exit_code = 3


class DegenerateDataError(AnnealTrackError, ValueError):
    """표본이 부족하거나 모두 같은 값이라 적합 불가"""

    exit_code = 3


class AccuracyError(AnnealTrackError):
    """적분 스텝 부족 또는 노름 보존 실패"""

    exit_code = 4


class DegeneracyError(AnnealTrackError):
    """에너지 갭이 0에 가까워 단열 지표를 정의할 수 없음"""

    exit_code = 4

    def __init__(self, message: str, s: float = float("nan")):
        super().__init__(message)
        self.s = s


__all__ = [
    "AnnealTrackError",
    "ArgumentError",
    "SizeLimitError",
    "FeasibilityError",
    "EmptyPosteriorError",
    "DegenerateDataError",
    "AccuracyError",
    "DegeneracyError",
]
