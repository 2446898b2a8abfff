#!/usr/bin/env python3
# 파일명: __init__.py
# 설명: annealtrack 패키지 초기화 파일
# 작성일: 2024
"""
양자 어닐링 기반 다중 표적 데이터 연관 패키지

이 패키지는 다음 기능들을 제공합니다:
- QUBO / Ising / 이진 정수계획 표현과 상호 변환
- k-rooks 및 다중 표적 데이터 연관(MTDA) Ising 문제 생성
- 정확 / 완전탐색 / 모의 담금질 / 단열 진화 샘플러
- 단열 스펙트럼과 닫힌계 진화 시뮬레이션
- 런 최소 에너지의 Gumbel 최대우도 적합
- 샘플 기반 하이브리드 JPDA 추적 재귀
"""

__version__ = "1.0.0"
__author__ = "annealtrack 프로젝트"
__description__ = "양자 어닐링 다중표적 데이터 연관 도구"

# 패키지 메타데이터
PACKAGE_INFO = {
    "name": "annealtrack",
    "version": __version__,
    "author": __author__,
    "description": __description__,
    "python_requires": ">=3.8",
    "required_libraries": ["numpy", "scipy", "filterpy", "loguru", "PyYAML", "typing_extensions"],
    "backends": ["exact", "exhaustive", "sa", "adiabatic"],
}

from .controllers.tracking_controller import TrackingController
from .core.qubo_core import BinaryIlp, IsingModel, Qubo
from .errors import AnnealTrackError
from .solvers.samplers import AnnealParams, Backend, RunResult, run
from .tracking.tracking_model import ScenarioParams, Scan, TargetState

__all__ = [
    "TrackingController",
    "BinaryIlp",
    "IsingModel",
    "Qubo",
    "AnnealTrackError",
    "AnnealParams",
    "Backend",
    "RunResult",
    "run",
    "ScenarioParams",
    "Scan",
    "TargetState",
]


def get_package_info():
    """패키지 정보 반환"""
    return PACKAGE_INFO


def print_package_info():
    """패키지 정보 출력"""
    print(f"=== {PACKAGE_INFO['name']} v{PACKAGE_INFO['version']} ===")
    print(f"설명: {PACKAGE_INFO['description']}")
    print(f"Python 요구사항: {PACKAGE_INFO['python_requires']}")
    print("\n필수 라이브러리:")
    for lib in PACKAGE_INFO["required_libraries"]:
        print(f"  - {lib}")
    print("\n샘플러 백엔드:")
    for backend in PACKAGE_INFO["backends"]:
        print(f"  - {backend}")
