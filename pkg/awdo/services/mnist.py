# -*- coding: utf-8 -*-
"""
MNIST 資料服務 - IDX 解析、20×20 裁切、合成資料

IDX 格式（big-endian）：
    影像：u32 magic 0x00000803 | u32 數量 | u32 列 | u32 行 | u8[] 像素（逐列）
    標籤：u32 magic 0x00000801 | u32 數量 | u8[] 標籤
"""

import gzip
import logging
import struct
from pathlib import Path

import numpy as np

from ..exceptions import (
    ConfigError,
    DataError,
    IdxDimensionError,
    IdxMagicError,
    IdxTruncatedError,
)
from ..models.network import Dataset, NetworkShape, RawMnist

logger = logging.getLogger(__name__)


IMAGE_MAGIC = 0x00000803
LABEL_MAGIC = 0x00000801
IMAGE_HEADER_SIZE = 16
LABEL_HEADER_SIZE = 8

# 28×28 取中央 20×20（第 4 到 23 列 / 行）
MNIST_SIDE = 28
CROP_OFFSET = 4
CROP_SIDE = 20
N_CLASSES = 10


def _read_header(data: bytes, magic: int, header_size: int) -> tuple:
    if len(data) < 4:
        raise IdxTruncatedError("檔案長度不足以讀取 magic number", len(data), "4 位元組")
    (found,) = struct.unpack(">I", data[:4])
    if found != magic:
        raise IdxMagicError(f"magic number 0x{found:08x} 不符", 0, f"0x{magic:08x}")
    if len(data) < header_size:
        raise IdxTruncatedError("檔頭不完整", len(data), f"{header_size} 位元組檔頭")
    return struct.unpack(f">{header_size // 4 - 1}I", data[4:header_size])


def _check_payload(data: bytes, header_size: int, payload_size: int) -> None:
    expected_end = header_size + payload_size
    if len(data) < expected_end:
        raise IdxTruncatedError("資料被截斷", len(data), f"{expected_end} 位元組")
    if len(data) > expected_end:
        raise IdxDimensionError("資料長度超過檔頭宣告的維度", expected_end, "檔案結束")


def parse_idx_images(data: bytes) -> np.ndarray:
    """解析影像檔，回傳 m × rows × cols uint8 陣列"""
    count, rows, cols = _read_header(data, IMAGE_MAGIC, IMAGE_HEADER_SIZE)
    if rows < 1:
        raise IdxDimensionError(f"列數 {rows} 不合法", 8, "≥ 1")
    if cols < 1:
        raise IdxDimensionError(f"行數 {cols} 不合法", 12, "≥ 1")

    _check_payload(data, IMAGE_HEADER_SIZE, count * rows * cols)
    pixels = np.frombuffer(data, dtype=np.uint8, count=count * rows * cols, offset=IMAGE_HEADER_SIZE)
    return pixels.reshape(count, rows, cols).copy()


def parse_idx_labels(data: bytes) -> np.ndarray:
    """解析標籤檔，回傳長度 m 的 uint8 陣列"""
    (count,) = _read_header(data, LABEL_MAGIC, LABEL_HEADER_SIZE)
    _check_payload(data, LABEL_HEADER_SIZE, count)
    return np.frombuffer(data, dtype=np.uint8, count=count, offset=LABEL_HEADER_SIZE).copy()


def write_idx_images(images: np.ndarray) -> bytes:
    """影像寫成 IDX bytes"""
    images = np.asarray(images, dtype=np.uint8)
    count, rows, cols = images.shape
    return struct.pack(">IIII", IMAGE_MAGIC, count, rows, cols) + images.tobytes()


def write_idx_labels(labels: np.ndarray) -> bytes:
    """標籤寫成 IDX bytes"""
    labels = np.asarray(labels, dtype=np.uint8)
    return struct.pack(">II", LABEL_MAGIC, labels.shape[0]) + labels.tobytes()


def _read_bytes(path: Path) -> bytes:
    try:
        if path.suffix == ".gz":
            with gzip.open(path, "rb") as f:
                return f.read()
        return path.read_bytes()
    except FileNotFoundError:
        raise DataError(f"找不到資料檔：{path}（請先手動下載 MNIST IDX 檔）")
    except OSError as e:
        raise DataError(f"無法讀取資料檔 {path}：{e}")


def load_raw_mnist(images_path, labels_path) -> RawMnist:
    """讀取影像與標籤檔（支援 .gz）"""
    images_path = Path(images_path)
    labels_path = Path(labels_path)

    images = parse_idx_images(_read_bytes(images_path))
    labels = parse_idx_labels(_read_bytes(labels_path))

    logger.info(f"📂 已讀取 {images.shape[0]} 張影像：{images_path.name}")
    return RawMnist(images=images, labels=labels)


def crop_center(images: np.ndarray) -> np.ndarray:
    """28×28 取中央 20×20：輸出 (r, c) = 輸入 (r + 4, c + 4)"""
    if images.ndim != 3 or images.shape[1:] != (MNIST_SIDE, MNIST_SIDE):
        raise DataError(f"影像必須是 {MNIST_SIDE}×{MNIST_SIDE}，收到形狀 {images.shape[1:]}")
    end = CROP_OFFSET + CROP_SIDE
    return images[:, CROP_OFFSET:end, CROP_OFFSET:end]


def to_dataset(raw: RawMnist, subset_m: int) -> Dataset:
    """
    建立 20×20 訓練集

    取檔案順序的前 subset_m 筆，逐列攤平成 400 維並除以 255。
    """
    if subset_m < 1 or subset_m > raw.m:
        raise DataError(f"子集大小 {subset_m} 必須介於 1 與資料數 {raw.m}")

    cropped = crop_center(raw.images[:subset_m])
    X = cropped.reshape(subset_m, CROP_SIDE * CROP_SIDE).astype(np.float64) / 255.0
    return Dataset.from_labels(X, raw.labels[:subset_m], N_CLASSES)


def synthetic_dataset(
    m: int,
    shape: NetworkShape,
    separability: float,
    rng: np.random.Generator,
) -> Dataset:
    """
    合成資料集（測試用）

    每類一個 [0,1] 原型，樣本 = separability × 原型 + (1 - separability) × 雜訊，
    separability = 1 時完全可分。每一類至少出現一次。
    """
    if m < shape.output:
        raise ConfigError(f"樣本數 m={m} 必須 ≥ 類別數 {shape.output}")
    if not 0.0 <= separability <= 1.0:
        raise ConfigError(f"separability={separability} 必須介於 [0, 1]")

    prototypes = rng.random((shape.output, shape.input))
    labels = rng.permutation(np.arange(m) % shape.output)
    noise = rng.random((m, shape.input))
    X = separability * prototypes[labels] + (1.0 - separability) * noise
    return Dataset.from_labels(np.clip(X, 0.0, 1.0), labels, shape.output)
