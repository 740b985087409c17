# -*- coding: utf-8 -*-
"""
梯度下降基準 - 全批次最速下降 + Armijo 回溯線搜尋
"""

import logging
import math
from typing import Callable, List, Optional, Tuple

import numpy as np

from ..exceptions import NumericalError
from ..models.network import Dataset, NetworkParams
from ..models.run import GdConfig, GdOptions, GdRecord
from .neural_net import accuracy, cost, flatten, gradient, predict, unflatten

logger = logging.getLogger(__name__)


# 每隔幾次迭代輸出一次進度
PROGRESS_EVERY = 50


def _check_cost(value: float, iteration: int) -> float:
    if not math.isfinite(value):
        raise NumericalError(f"第 {iteration} 次迭代成本為 {value}，停止訓練")
    return value


def steepest_descent(
    x0: np.ndarray,
    cost_fn: Callable[[np.ndarray], float],
    grad_fn: Callable[[np.ndarray], np.ndarray],
    config: GdOptions,
    callback: Optional[Callable[[int, np.ndarray, float, float, bool], None]] = None,
) -> Tuple[np.ndarray, List[Tuple[int, float, float, bool]]]:
    """
    最速下降

    每次迭代從 initial_step 開始，乘上 armijo_beta 直到
        f(x - t g) ≤ f(x) - c t ||g||²
    超過 max_halvings 次仍不成立時接受最小步長並標記。

    Returns:
        (最終 x, [(迭代, 成本, 步長, 是否觸及上限), ...])，第 0 筆為初始成本
    """
    x = np.array(x0, dtype=np.float64)
    fx = _check_cost(float(cost_fn(x)), 0)
    records = [(0, fx, 0.0, False)]
    if callback is not None:
        callback(0, x, fx, 0.0, False)

    for iteration in range(1, config.max_iterations + 1):
        g = grad_fn(x)
        g_norm_sq = float(np.dot(g, g))

        step = config.initial_step
        hit_cap = False
        halvings = 0
        while True:
            candidate = x - step * g
            f_candidate = float(cost_fn(candidate))
            if math.isfinite(f_candidate) and f_candidate <= fx - config.armijo_c * step * g_norm_sq:
                break
            if halvings >= config.max_halvings:
                hit_cap = True
                break
            step *= config.armijo_beta
            halvings += 1

        x = candidate
        fx = _check_cost(f_candidate, iteration)
        records.append((iteration, fx, step, hit_cap))
        if callback is not None:
            callback(iteration, x, fx, step, hit_cap)

    return x, records


def gd_train(
    params0: NetworkParams,
    data: Dataset,
    config: GdConfig,
) -> Tuple[NetworkParams, List[GdRecord]]:
    """
    以梯度下降訓練網路

    Returns:
        (訓練後權重, 每次迭代的 (迭代, 成本, 訓練準確率))
    """
    shape = params0.shape
    history: List[GdRecord] = []

    def cost_fn(x: np.ndarray) -> float:
        return cost(unflatten(x, shape), data, config.reg_lambda)

    def grad_fn(x: np.ndarray) -> np.ndarray:
        return flatten(gradient(unflatten(x, shape), data, config.reg_lambda))

    def record(iteration: int, x: np.ndarray, fx: float, step: float, hit_cap: bool) -> None:
        acc = accuracy(predict(unflatten(x, shape), data.X), data.labels)
        history.append(GdRecord(iteration, fx, acc, step, hit_cap))
        if hit_cap:
            logger.warning(f"⚠️ 第 {iteration} 次迭代線搜尋達到 {config.max_halvings} 次上限")
        if iteration % PROGRESS_EVERY == 0:
            logger.info(f"🔄 第 {iteration} 次迭代：成本 {fx:.6f}, 準確率 {acc:.4f}")

    logger.info(f"🚀 梯度下降開始：{shape}, m={data.m}, λ={config.reg_lambda}, 最多 {config.max_iterations} 次迭代")
    x, _ = steepest_descent(flatten(params0), cost_fn, grad_fn, config, record)
    logger.info(f"✅ 梯度下降結束：成本 {history[-1].cost:.6f}, 準確率 {history[-1].train_accuracy:.4f}")

    return unflatten(x, shape), history
