#!/usr/bin/env python3
# 파일명: file_io.py
# 설명: 결과 파일 저장 유틸리티 (원자적 쓰기, JSON / CSV / JSON-lines)
# 작성일: 2024
"""
결과 파일 저장 함수들

모든 쓰기는 같은 디렉터리의 임시 파일에 먼저 쓴 뒤 os.replace로
교체합니다. 중간에 중단되어도 반쯤 쓰인 결과 파일이 남지 않습니다.
"""

import csv
import io
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Iterable, Sequence, Union

PathLike = Union[str, Path]


def atomic_write_text(path: PathLike, text: str) -> Path:
    """텍스트를 임시 파일에 쓰고 rename으로 교체"""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(dir=str(target.parent), prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, target)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return target


def write_json(path: PathLike, payload: Any) -> Path:
    return atomic_write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def write_csv(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(list(header))
    for row in rows:
        writer.writerow([_format_cell(v) for v in row])
    return atomic_write_text(path, buffer.getvalue())


def write_jsonl(path: PathLike, records: Iterable[Any]) -> Path:
    lines = [json.dumps(record, sort_keys=True) for record in records]
    return atomic_write_text(path, "\n".join(lines) + ("\n" if lines else ""))


def read_json(path: PathLike) -> Any:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def read_csv_column(path: PathLike, column: str) -> list:
    """CSV 파일에서 한 열을 float 목록으로 읽기"""
    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None or column not in reader.fieldnames:
            raise KeyError(f"CSV에 '{column}' 열이 없습니다: {path}")
        return [float(row[column]) for row in reader]


def _format_cell(value: Any) -> Any:
    # repr 정밀도 유지 (결정적 출력)
    if isinstance(value, float):
        return repr(value)
    return value
