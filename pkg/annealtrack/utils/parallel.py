#!/usr/bin/env python3
# 파일명: parallel.py
# 설명: ANNEALTRACK_THREADS 제한을 따르는 순서 보존 스레드 맵
# 작성일: 2024

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from loguru import logger

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "ANNEALTRACK_THREADS"


def thread_limit(requested: Optional[int] = None) -> int:
    """사용할 워커 스레드 수 (환경 변수 상한 적용)"""
    limit = os.cpu_count() or 1
    env_value = os.environ.get(THREADS_ENV)
    if env_value:
        try:
            limit = max(1, int(env_value))
        except ValueError:
            logger.warning(f"{THREADS_ENV}={env_value!r} 해석 실패, 기본값 {limit} 사용")
    if requested is not None:
        limit = max(1, min(limit, int(requested)))
    return limit


def ordered_map(func: Callable[[T], R], items: Iterable[T], max_workers: Optional[int] = None) -> List[R]:
    """입력 순서대로 결과를 돌려주는 병렬 map (워커 1개면 직렬 실행)"""
    work = list(items)
    workers = min(thread_limit(max_workers), max(1, len(work)))
    if workers <= 1:
        return [func(item) for item in work]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, work))
