# -*- coding: utf-8 -*-
"""
神經網路服務 - 400-25-10 sigmoid 前饋網路

成本函數（正規化交叉熵）：
    J = (1/m) Σ_i Σ_k [-y ln(h) - (1-y) ln(1-h)] + (λ/2m) (Σ θ1² + Σ θ2²)
偏差欄不納入正規化；log 的參數下限為 1e-15。
"""

from typing import Tuple

import numpy as np
from scipy.special import expit

from ..exceptions import ConfigError, ShapeError
from ..models.network import Dataset, NetworkParams, NetworkShape
from ..models.pressure import PressureFunction


# log 參數下限
LOG_FLOOR = 1e-15

# 權重初始化範圍
INIT_RANGE = (-0.12, 0.12)


def sigmoid(z):
    """1 / (1 + e^(-z))，大數值也不會溢位"""
    return expit(z)


def _with_bias(A: np.ndarray) -> np.ndarray:
    return np.hstack([np.ones((A.shape[0], 1)), A])


def _check_input(params: NetworkParams, X: np.ndarray) -> None:
    expected = params.theta1.shape[1] - 1
    if X.ndim != 2 or X.shape[1] != expected:
        raise ShapeError(f"輸入需要 {expected} 個特徵，收到形狀 {X.shape}")


def _check_data(params: NetworkParams, data: Dataset) -> None:
    _check_input(params, data.X)
    if data.Y.shape[1] != params.theta2.shape[0]:
        raise ShapeError(f"輸出層 {params.theta2.shape[0]} 個，標籤有 {data.Y.shape[1]} 類")


def forward(params: NetworkParams, X: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    前向傳播

    Returns:
        (隱藏層激活 m × hidden, 輸出層激活 m × output)
    """
    _check_input(params, X)
    a1 = sigmoid(_with_bias(X) @ params.theta1.T)
    h = sigmoid(_with_bias(a1) @ params.theta2.T)
    return a1, h


def _penalty(params: NetworkParams) -> float:
    return float(np.sum(params.theta1[:, 1:] ** 2) + np.sum(params.theta2[:, 1:] ** 2))


def cost(params: NetworkParams, data: Dataset, reg_lambda: float) -> float:
    """正規化交叉熵成本"""
    if not np.isfinite(reg_lambda) or reg_lambda < 0:
        raise ConfigError(f"正規化常數 λ={reg_lambda} 必須是非負有限值")
    _check_data(params, data)

    m = data.m
    _, h = forward(params, data.X)
    Y = data.Y
    cross_entropy = -Y * np.log(np.maximum(h, LOG_FLOOR)) - (1.0 - Y) * np.log(np.maximum(1.0 - h, LOG_FLOOR))
    return float(np.sum(cross_entropy) / m + reg_lambda / (2.0 * m) * _penalty(params))


def gradient(params: NetworkParams, data: Dataset, reg_lambda: float) -> NetworkParams:
    """
    反向傳播梯度

    輸出層 delta = h - Y
    隱藏層 delta = (delta · θ2 去掉偏差欄) ⊙ a1 ⊙ (1 - a1)
    """
    _check_data(params, data)

    m = data.m
    a1, h = forward(params, data.X)
    delta3 = h - data.Y
    delta2 = (delta3 @ params.theta2[:, 1:]) * a1 * (1.0 - a1)

    grad1 = delta2.T @ _with_bias(data.X) / m
    grad2 = delta3.T @ _with_bias(a1) / m

    reg1 = params.theta1.copy()
    reg1[:, 0] = 0.0
    reg2 = params.theta2.copy()
    reg2[:, 0] = 0.0

    return NetworkParams(
        theta1=grad1 + reg_lambda / m * reg1,
        theta2=grad2 + reg_lambda / m * reg2,
    )


def flatten(params: NetworkParams) -> np.ndarray:
    """θ1（列優先）接著 θ2（列優先）"""
    return np.concatenate([params.theta1.ravel(), params.theta2.ravel()])


def unflatten(vector: np.ndarray, shape: NetworkShape) -> NetworkParams:
    """flatten 的反運算"""
    vector = np.asarray(vector, dtype=np.float64)
    expected = shape.parameter_count
    if vector.shape != (expected,):
        raise ShapeError(f"參數向量長度應為 {expected}，收到 {vector.size}")

    split = shape.hidden * (shape.input + 1)
    return NetworkParams(
        theta1=vector[:split].reshape(shape.theta1_shape).copy(),
        theta2=vector[split:].reshape(shape.theta2_shape).copy(),
    )


def predict(params: NetworkParams, X: np.ndarray) -> np.ndarray:
    """預測標籤（同分取較小索引）"""
    _, h = forward(params, X)
    return np.argmax(h, axis=1)


def accuracy(labels: np.ndarray, truth: np.ndarray) -> float:
    """完全相符的比例"""
    labels = np.asarray(labels)
    truth = np.asarray(truth)
    if labels.shape != truth.shape:
        raise ShapeError(f"預測 {labels.shape} 與答案 {truth.shape} 形狀不符")
    if labels.size == 0:
        return 0.0
    return float(np.mean(labels == truth))


def init_params(
    shape: NetworkShape,
    lo: float,
    hi: float,
    rng: np.random.Generator,
) -> NetworkParams:
    """權重與偏差皆取自 [lo, hi] 均勻分布"""
    if not (np.isfinite(lo) and np.isfinite(hi)) or not lo < hi:
        raise ConfigError(f"初始化範圍 [{lo}, {hi}] 不合法：下界必須小於上界")
    return NetworkParams(
        theta1=rng.uniform(lo, hi, size=shape.theta1_shape),
        theta2=rng.uniform(lo, hi, size=shape.theta2_shape),
    )


def make_pressure_function(shape: NetworkShape, data: Dataset, reg_lambda: float) -> PressureFunction:
    """壓力函數 = cost ∘ unflatten，位置向量就是權重"""
    if data.X.shape[1] != shape.input or data.Y.shape[1] != shape.output:
        raise ShapeError(f"資料集與網路形狀 {shape} 不符")

    def network_cost(position: np.ndarray) -> float:
        return cost(unflatten(position, shape), data, reg_lambda)

    return PressureFunction(fn=network_cost, dimension=shape.parameter_count, name=f"nn_cost[{shape}]")
