#!/usr/bin/env python3
# 파일명: test_utils.py
# 설명: 결과 파일 저장과 스레드 병렬 실행 유틸리티 테스트
# 작성일: 2024

import json

import pytest

from annealtrack.utils.file_io import atomic_write_text, read_csv_column, write_csv, write_json, write_jsonl
from annealtrack.utils.parallel import THREADS_ENV, ordered_map, thread_limit


def test_atomic_write_creates_parent_and_leaves_no_temp(tmp_path):
    target = atomic_write_text(tmp_path / "a" / "b.txt", "안녕\n")
    assert target.read_text(encoding="utf-8") == "안녕\n"
    assert [p.name for p in target.parent.iterdir()] == ["b.txt"]


def test_write_json_is_sorted(tmp_path):
    path = write_json(tmp_path / "x.json", {"b": 1, "a": 2})
    text = path.read_text(encoding="utf-8")
    assert text.index('"a"') < text.index('"b"')
    assert json.loads(text) == {"a": 2, "b": 1}


def test_write_csv_keeps_float_precision(tmp_path):
    path = write_csv(tmp_path / "x.csv", ["run", "e_hat0"], [[0, 0.1 + 0.2]])
    assert read_csv_column(path, "e_hat0") == [0.1 + 0.2]


def test_read_csv_column_missing(tmp_path):
    path = write_csv(tmp_path / "x.csv", ["run"], [[0]])
    with pytest.raises(KeyError):
        read_csv_column(path, "e_hat0")


def test_write_jsonl_empty(tmp_path):
    assert write_jsonl(tmp_path / "x.jsonl", []).read_text(encoding="utf-8") == ""


def test_thread_limit_follows_environment(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, "3")
    assert thread_limit() == 3
    assert thread_limit(8) == 3
    assert thread_limit(2) == 2
    monkeypatch.setenv(THREADS_ENV, "많이")
    assert thread_limit(1) == 1


def test_ordered_map_keeps_input_order(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, "4")
    assert ordered_map(lambda x: x * x, range(20)) == [x * x for x in range(20)]
    assert ordered_map(str, [], max_workers=4) == []
