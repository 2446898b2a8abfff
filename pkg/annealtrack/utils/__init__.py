#!/usr/bin/env python3
# 파일명: utils/__init__.py
# 설명: 공용 유틸리티 모듈 패키지 초기화
# 작성일: 2024
"""
공용 유틸리티 모듈들

- 로그 설정 (loguru)
- 결과 파일 저장 (원자적 쓰기)
- 스레드 병렬 실행
"""

from .logging_setup import setup_logging
from .file_io import atomic_write_text, write_json, write_csv, write_jsonl, read_json
from .parallel import thread_limit, ordered_map

__all__ = [
    "setup_logging",
    "atomic_write_text",
    "write_json",
    "write_csv",
    "write_jsonl",
    "read_json",
    "thread_limit",
    "ordered_map",
]
