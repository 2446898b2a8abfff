#!/usr/bin/env python3
# 파일명: controllers/__init__.py
# 설명: 컨트롤러 모듈 패키지 초기화
# 작성일: 2024
"""
추적 컨트롤러 모듈들

이 패키지는 다음 컨트롤러들을 제공합니다:
- 추적 컨트롤러 (스캔별 하이브리드 JPDA 재귀)
"""

from .tracking_controller import TrackingController, TrackerMode, ScanOutcome

__all__ = ["TrackingController", "TrackerMode", "ScanOutcome"]
