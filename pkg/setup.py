#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
annealtrack 설치 스크립트

사용법:
    pip3 install .            # 패키지 설치 (annealtrack 명령 등록)
    pip3 install -e .[dev]    # 개발 모드 + 테스트 도구
"""

from setuptools import find_packages, setup


def read_requirements(path="requirements.txt"):
    """requirements.txt에서 주석과 빈 줄을 뺀 의존성 목록"""
    requirements = []
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            line = line.strip()
            if line and not line.startswith("#"):
                requirements.append(line)
    return requirements


setup(
    name="annealtrack",
    version="1.0.0",
    description="양자 어닐링 다중표적 데이터 연관 도구",
    packages=find_packages(exclude=("tests", "tests.*", "examples", "examples.*")),
    python_requires=">=3.8",
    install_requires=[req for req in read_requirements() if not req.startswith("pytest")],
    extras_require={"dev": ["pytest>=7.0.0"]},
    entry_points={"console_scripts": ["annealtrack=annealtrack.cli:main"]},
)
