#!/usr/bin/env python3
# 파일명: stats/__init__.py
# 설명: 극값 통계 모듈 패키지 초기화
# 작성일: 2024

from .extreme_stats import GumbelParams, gumbel_pdf, fit_gumbel_mle, run_minima

__all__ = ["GumbelParams", "gumbel_pdf", "fit_gumbel_mle", "run_minima"]
