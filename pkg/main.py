#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
annealtrack 메인 실행 프로그램
- 양자 어닐링 기반 다중 표적 데이터 연관 도구
- 문제 생성, 샘플링, 추적, 스펙트럼/스윕, Gumbel 적합을 명령 하나로 실행

사용법:
    python3 main.py build krooks --k 3 --out out/
    python3 main.py track --scenario scenario.yaml --scans 5 --backend exact
    python3 main.py --help

작성일: 2024
"""

import sys

from annealtrack.cli import main as cli_main


def main() -> int:
    """메인 함수"""
    try:
        return cli_main()
    except KeyboardInterrupt:
        print("\n사용자에 의해 중단되었습니다.")
        return 130


if __name__ == "__main__":
    sys.exit(main())
