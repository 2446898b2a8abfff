#!/usr/bin/env python3
# 파일명: problems/__init__.py
# 설명: Ising 문제 생성 모듈 패키지 초기화
# 작성일: 2024
"""k-rooks / 편향 k-rooks / MTDA 문제 생성과 상태 복호화"""

from .problem_builders import (
    ProblemLabels,
    krooks_ising,
    biased_krooks_ising,
    mtda_ising,
    mtda_labels,
    decode_state,
    encode_association,
)

__all__ = [
    "ProblemLabels",
    "krooks_ising",
    "biased_krooks_ising",
    "mtda_ising",
    "mtda_labels",
    "decode_state",
    "encode_association",
]
