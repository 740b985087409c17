# -*- coding: utf-8 -*-
"""
匯出服務 - CSV 歷程與權重二進位檔

CSV：'.' 小數點、'\n' 換行，浮點數以 repr 輸出（與語系無關、可完整還原）。
權重檔：u64 little-endian 長度 + float64 little-endian 內容。
"""

import csv
import io
import struct
from pathlib import Path
from typing import Dict, Iterable, List, Sequence

import numpy as np

from ..exceptions import DataError
from ..models.run import GdRecord, RunHistory


BENCH_HEADER = ["iteration", "evaluations", "best_pressure", "mean_pressure"]
GD_HEADER = ["iteration", "cost", "train_accuracy"]
AWDO_HEADER = ["iteration", "evaluations", "best_pressure", "train_accuracy_of_best"]


def _format(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    """產生 CSV 內容"""
    output = io.StringIO()
    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_format(v) for v in row])
    return output.getvalue()


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(to_csv(header, rows))
    return path


def bench_rows(history: RunHistory) -> List[tuple]:
    return [(r.iteration, r.evaluations, r.best_pressure, r.mean_pressure) for r in history]


def gd_rows(records: Sequence[GdRecord]) -> List[tuple]:
    return [(r.iteration, r.cost, r.train_accuracy) for r in records]


def read_csv(path) -> List[Dict[str, float]]:
    """讀取本程式輸出的 CSV，欄位全部轉成數字"""
    path = Path(path)
    try:
        content = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise DataError(f"找不到 CSV 檔：{path}")

    rows = []
    for i, row in enumerate(csv.DictReader(io.StringIO(content)), start=2):
        try:
            rows.append({k: float(v) for k, v in row.items()})
        except (TypeError, ValueError):
            raise DataError(f"{path.name} 第 {i} 行無法解析為數字")
    return rows


def write_params_file(path, vector: np.ndarray) -> Path:
    """寫出權重向量"""
    vector = np.asarray(vector, dtype="<f8")
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as f:
        f.write(struct.pack("<Q", vector.shape[0]))
        f.write(vector.tobytes())
    return path


def read_params_file(path) -> np.ndarray:
    """讀取權重向量，長度前綴必須與檔案大小一致"""
    path = Path(path)
    try:
        data = path.read_bytes()
    except FileNotFoundError:
        raise DataError(f"找不到權重檔：{path}")

    if len(data) < 8:
        raise DataError(f"權重檔 {path.name} 長度不足以讀取長度前綴")
    (count,) = struct.unpack("<Q", data[:8])
    if len(data) != 8 + 8 * count:
        raise DataError(f"權重檔 {path.name} 宣告 {count} 個值，但內容為 {len(data) - 8} 位元組")
    return np.frombuffer(data, dtype="<f8", offset=8).astype(np.float64)
