#!/usr/bin/env python3
# 파일명: config/__init__.py
# 설명: 설정 모듈 패키지 초기화
# 작성일: 2024
"""
설정 관리 모듈

- 기본값 사전 (시나리오, 샘플러, MTDA, 단열 시뮬레이션, 가드)
- 시나리오 파일(JSON/YAML) 읽기
- 설정 검증 및 출력
"""

from .settings import (
    SCENARIO_DEFAULTS,
    SAMPLER_DEFAULTS,
    MTDA_DEFAULTS,
    ADIABATIC_DEFAULTS,
    GUARD_LIMITS,
    load_scenario,
    scenario_from_dict,
    scenario_to_dict,
    validate_config,
    print_config,
)

__all__ = [
    "SCENARIO_DEFAULTS",
    "SAMPLER_DEFAULTS",
    "MTDA_DEFAULTS",
    "ADIABATIC_DEFAULTS",
    "GUARD_LIMITS",
    "load_scenario",
    "scenario_from_dict",
    "scenario_to_dict",
    "validate_config",
    "print_config",
]
