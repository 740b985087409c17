# -*- coding: utf-8 -*-
"""
神經網路模型 - 網路形狀、權重與資料集
"""

from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import DataError, ShapeError


class NetworkShape(BaseModel):
    """三層網路形狀（預設 400-25-10）"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    input: int = Field(default=400, ge=1)
    hidden: int = Field(default=25, ge=1)
    output: int = Field(default=10, ge=1)

    @property
    def theta1_shape(self) -> tuple:
        return (self.hidden, self.input + 1)

    @property
    def theta2_shape(self) -> tuple:
        return (self.output, self.hidden + 1)

    @property
    def parameter_count(self) -> int:
        return self.hidden * (self.input + 1) + self.output * (self.hidden + 1)

    def __str__(self):
        return f"{self.input}-{self.hidden}-{self.output}"


@dataclass
class NetworkParams:
    """權重矩陣，第 0 欄為偏差"""
    theta1: np.ndarray   # hidden × (input + 1)
    theta2: np.ndarray   # output × (hidden + 1)

    def __post_init__(self):
        if self.theta1.ndim != 2 or self.theta2.ndim != 2:
            raise ShapeError("theta1 / theta2 必須是二維矩陣")
        if self.theta2.shape[1] != self.theta1.shape[0] + 1:
            raise ShapeError(
                f"theta2 欄數 {self.theta2.shape[1]} 應為隱藏層數 {self.theta1.shape[0]} + 1"
            )

    @property
    def shape(self) -> NetworkShape:
        return NetworkShape(
            input=self.theta1.shape[1] - 1,
            hidden=self.theta1.shape[0],
            output=self.theta2.shape[0],
        )

    def __repr__(self):
        return f"<NetworkParams {self.shape}>"


@dataclass
class Dataset:
    """特徵矩陣（[0,1]）與 one-hot 標籤"""
    X: np.ndarray        # m × input
    Y: np.ndarray        # m × output
    labels: np.ndarray   # m

    @classmethod
    def from_labels(cls, X: np.ndarray, labels: np.ndarray, n_classes: int) -> "Dataset":
        """由整數標籤建立 one-hot 矩陣（數字 d 對應第 d 欄）"""
        labels = np.asarray(labels, dtype=np.int64)
        if labels.size and (labels.min() < 0 or labels.max() >= n_classes):
            raise DataError(f"標籤必須介於 0 與 {n_classes - 1}")
        Y = np.zeros((labels.shape[0], n_classes))
        Y[np.arange(labels.shape[0]), labels] = 1.0
        return cls(X=np.asarray(X, dtype=np.float64), Y=Y, labels=labels)

    def __post_init__(self):
        if self.X.ndim != 2 or self.Y.ndim != 2:
            raise ShapeError("X / Y 必須是二維矩陣")
        m = self.X.shape[0]
        if m < 1:
            raise DataError("資料集至少需要一筆資料")
        if self.Y.shape[0] != m or self.labels.shape != (m,):
            raise ShapeError(f"X 有 {m} 筆，Y 有 {self.Y.shape[0]} 筆，labels 有 {self.labels.shape[0]} 筆")
        if np.any(self.X < 0.0) or np.any(self.X > 1.0):
            raise DataError("特徵值必須介於 [0, 1]")
        one_hot = np.all((self.Y == 0.0) | (self.Y == 1.0)) and np.all(self.Y.sum(axis=1) == 1.0)
        if not one_hot or not np.array_equal(np.argmax(self.Y, axis=1), self.labels):
            raise DataError("Y 每一列必須恰好一個 1，位置等於標籤")

    @property
    def m(self) -> int:
        return int(self.X.shape[0])

    def __repr__(self):
        return f"<Dataset m={self.m} features={self.X.shape[1]} classes={self.Y.shape[1]}>"


@dataclass
class RawMnist:
    """MNIST 原始影像（m × 28 × 28 uint8）與標籤"""
    images: np.ndarray
    labels: np.ndarray

    def __post_init__(self):
        if self.images.shape[0] != self.labels.shape[0]:
            raise DataError(f"影像 {self.images.shape[0]} 張，標籤 {self.labels.shape[0]} 個，數量不符")
        if self.labels.size and int(self.labels.max()) > 9:
            raise DataError("MNIST 標籤必須介於 0 與 9")

    @property
    def m(self) -> int:
        return int(self.images.shape[0])
