#!/usr/bin/env python3
# 파일명: logging_setup.py
# 설명: loguru 로거 출력 설정 (stderr + 선택적 파일)
# 작성일: 2024

import sys
from typing import Optional

from loguru import logger

LOG_FORMAT = (
    "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan> - <level>{message}</level>"
)


def setup_logging(level: str = "INFO", log_file: Optional[str] = None) -> None:
    """기본 싱크를 제거하고 stderr(와 파일) 싱크를 다시 등록"""
    logger.remove()
    logger.add(sys.stderr, level=level.upper(), format=LOG_FORMAT)
    if log_file:
        logger.add(log_file, level="DEBUG", enqueue=True)
    logger.debug(f"로그 레벨 설정: {level.upper()}")
