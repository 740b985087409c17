# -*- coding: utf-8 -*-
"""
影像服務 - 隱藏層權重與資料樣本輸出成 PGM (P5)

每個磚塊各自 min-max 正規化到 0..255，常數磚塊為 128；
磚塊之間以 1 像素黑線分隔。
"""

import math
from pathlib import Path

import numpy as np
from PIL import Image

from ..exceptions import ConfigError, ShapeError
from ..models.network import Dataset, NetworkParams


CONSTANT_TILE_VALUE = 128
SEPARATOR = 1


def normalize_tile(tile: np.ndarray) -> np.ndarray:
    """min-max 正規化到 0..255"""
    lo = float(tile.min())
    hi = float(tile.max())
    if hi == lo:
        return np.full(tile.shape, CONSTANT_TILE_VALUE, dtype=np.uint8)
    return np.rint((tile - lo) / (hi - lo) * 255.0).astype(np.uint8)


def tile_grid(tiles: np.ndarray, columns: int) -> np.ndarray:
    """
    把 k × side × side 的磚塊排成格狀

    寬 = columns · side + (columns - 1) · 1，空格子保持黑色。
    """
    count, rows_px, cols_px = tiles.shape
    rows = math.ceil(count / columns)
    height = rows * rows_px + (rows - 1) * SEPARATOR
    width = columns * cols_px + (columns - 1) * SEPARATOR
    canvas = np.zeros((height, width), dtype=np.uint8)

    for k in range(count):
        r, c = divmod(k, columns)
        top = r * (rows_px + SEPARATOR)
        left = c * (cols_px + SEPARATOR)
        canvas[top:top + rows_px, left:left + cols_px] = normalize_tile(tiles[k])
    return canvas


def _square_side(size: int) -> int:
    side = math.isqrt(size)
    if side * side != size:
        raise ShapeError(f"輸入層 {size} 不是平方數，無法排成方形影像")
    return side


def render_weights(params: NetworkParams) -> np.ndarray:
    """每個隱藏神經元的非偏差輸入權重排成一個磚塊（25 個 → 5×5）"""
    weights = params.theta1[:, 1:]
    side = _square_side(weights.shape[1])
    hidden = weights.shape[0]
    columns = math.ceil(math.sqrt(hidden))
    return tile_grid(weights.reshape(hidden, side, side), columns)


def render_samples(data: Dataset, count: int, columns: int = 10) -> np.ndarray:
    """資料集前 count 張影像排成格狀"""
    if count < 1:
        raise ConfigError(f"張數 {count} 必須 ≥ 1")
    count = min(count, data.m)
    side = _square_side(data.X.shape[1])
    return tile_grid(data.X[:count].reshape(count, side, side), min(columns, count))


def save_pgm(image: np.ndarray, path) -> Path:
    """存成 binary PGM (P5)"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(np.ascontiguousarray(image, dtype=np.uint8)).save(path, format="PPM")
    return path
