# -*- coding: utf-8 -*-
"""
WDO 核心 - 空氣團排名、速度更新、位置更新

速度更新（每個維度 d）：
    u_new[d] = (1 - α) u[d] - g x[d] + |1 - 1/i| RT (x_max[d] - x[d]) + c u[od] / i
其中 i 為排名、od 為隨機挑選的其他維度（D = 1 時科氏項為 0）。
速度截斷在 [-0.3, 0.3]，位置更新 x + u（Δt = 1）後截斷在 [-1, 1]。
"""

import dataclasses
import logging
import math
from concurrent.futures import Executor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import ConfigError, PressureError
from ..models.parcel import (
    POSITION_MAX,
    POSITION_MIN,
    VELOCITY_MAX,
    BestTracker,
    Parcel,
    WdoCoefficients,
)
from ..models.pressure import PressureFunction

logger = logging.getLogger(__name__)


def init_population(
    D: int,
    N: int,
    init_lo: float,
    init_hi: float,
    rng: np.random.Generator,
) -> List[Parcel]:
    """
    建立初始族群

    位置每個座標取自 [init_lo, init_hi] 均勻分布，速度為 0，壓力尚未評估。
    """
    if D < 1:
        raise ConfigError(f"維度 D={D} 必須 ≥ 1")
    if N < 2:
        raise ConfigError(f"族群大小 N={N} 必須 ≥ 2")
    if not (math.isfinite(init_lo) and math.isfinite(init_hi)) or not init_lo < init_hi:
        raise ConfigError(f"初始範圍 [{init_lo}, {init_hi}] 不合法：下界必須小於上界")
    if init_lo < POSITION_MIN or init_hi > POSITION_MAX:
        raise ConfigError(f"初始範圍 [{init_lo}, {init_hi}] 超出搜尋範圍 [-1, 1]")

    positions = rng.uniform(init_lo, init_hi, size=(N, D))
    return [
        Parcel(position=positions[k].copy(), velocity=np.zeros(D))
        for k in range(N)
    ]


def rank_population(parcels: Sequence[Parcel]) -> List[Parcel]:
    """
    依壓力排名（1 = 最低壓力）

    同分時原本索引較前者排名較佳。
    """
    pressures = []
    for k, parcel in enumerate(parcels):
        if not parcel.is_evaluated or not math.isfinite(parcel.pressure):
            raise PressureError(f"壓力值 {parcel.pressure} 無法排名", parcel_index=k)
        pressures.append(parcel.pressure)

    order = np.argsort(np.asarray(pressures), kind="stable")
    ranks = np.empty(len(parcels), dtype=np.int64)
    ranks[order] = np.arange(1, len(parcels) + 1)

    return [
        dataclasses.replace(parcel, rank=int(ranks[k]))
        for k, parcel in enumerate(parcels)
    ]


def draw_other_dimensions(D: int, rng: np.random.Generator) -> Optional[np.ndarray]:
    """每個維度各挑一個「其他維度」，在其餘 D-1 個維度中均勻分布"""
    if D == 1:
        return None
    offsets = rng.integers(1, D, size=D)
    return (np.arange(D) + offsets) % D


def raw_velocity(
    parcel: Parcel,
    coeffs: WdoCoefficients,
    best: BestTracker,
    other_dims: Optional[np.ndarray],
) -> np.ndarray:
    """速度更新公式（未截斷）"""
    i = parcel.rank
    u = parcel.velocity
    x = parcel.position

    velocity = (
        (1.0 - coeffs.alpha) * u
        - coeffs.g * x
        + abs(1.0 - 1.0 / i) * coeffs.rt * (best.best_position - x)
    )
    if other_dims is not None:
        # 讀取更新前的速度向量
        velocity = velocity + coeffs.c * u[other_dims] / i
    return velocity


def update_velocity(
    parcel: Parcel,
    coeffs: WdoCoefficients,
    best: BestTracker,
    rng: np.random.Generator,
) -> np.ndarray:
    """更新速度並截斷在 [-V_max, V_max]"""
    if parcel.rank is None or parcel.rank < 1:
        raise ConfigError(f"空氣團排名 {parcel.rank} 不合法，需先排名")
    other_dims = draw_other_dimensions(parcel.dimension, rng)
    velocity = raw_velocity(parcel, coeffs, best, other_dims)
    return np.clip(velocity, -VELOCITY_MAX, VELOCITY_MAX)


def update_position(parcel: Parcel, new_velocity: np.ndarray) -> np.ndarray:
    """位置 = 目前位置 + 速度（Δt = 1），截斷在 [-1, 1]"""
    return np.clip(parcel.position + new_velocity, POSITION_MIN, POSITION_MAX)


def _evaluate_one(f: PressureFunction, index: int, position: np.ndarray) -> float:
    try:
        value = f(position)
    except PressureError:
        raise
    except Exception as e:
        raise PressureError(f"壓力函數失敗：{e}", parcel_index=index) from e

    if not math.isfinite(value):
        raise PressureError(f"壓力值 {value} 不是有限值", parcel_index=index)
    return value


def evaluate_population(
    parcels: Sequence[Parcel],
    f: PressureFunction,
    executor: Optional[Executor] = None,
) -> List[Parcel]:
    """
    評估每個空氣團的壓力

    有 executor 時平行計算，結果依索引收集，順序不影響結果。
    """
    if executor is None:
        pressures = [_evaluate_one(f, k, p.position) for k, p in enumerate(parcels)]
    else:
        futures = [executor.submit(_evaluate_one, f, k, p.position) for k, p in enumerate(parcels)]
        pressures = [future.result() for future in futures]

    return [
        dataclasses.replace(parcel, pressure=pressures[k])
        for k, parcel in enumerate(parcels)
    ]


def best_from_population(parcels: Sequence[Parcel]) -> BestTracker:
    """由已評估的族群取得最佳點（同分取索引較前者）"""
    pressures = np.array([p.pressure for p in parcels], dtype=np.float64)
    k = int(np.argmin(pressures))
    return BestTracker(best_position=parcels[k].position.copy(), best_pressure=float(pressures[k]))


def wdo_step(
    parcels: Sequence[Parcel],
    per_parcel_coeffs: Sequence[WdoCoefficients],
    f: PressureFunction,
    best: BestTracker,
    rng: np.random.Generator,
    executor: Optional[Executor] = None,
) -> Tuple[List[Parcel], BestTracker]:
    """
    執行一次 WDO 迭代

    1. 每個空氣團依自己的係數更新速度與位置（共用同一個 x_max）
    2. 評估新位置的壓力
    3. 更新全域最佳
    4. 重新排名
    """
    if len(per_parcel_coeffs) != len(parcels):
        raise ConfigError(f"係數組數 {len(per_parcel_coeffs)} 與空氣團數 {len(parcels)} 不符")

    ranks = np.array([p.rank if p.rank is not None else 0 for p in parcels], dtype=np.float64)
    if np.any(ranks < 1):
        raise ConfigError("空氣團需先排名才能更新速度")

    N = len(parcels)
    D = parcels[0].dimension
    X = np.stack([p.position for p in parcels])
    U = np.stack([p.velocity for p in parcels])
    alpha, g, rt, c = (np.array(col)[:, None] for col in zip(*(k.as_tuple() for k in per_parcel_coeffs)))
    i = ranks[:, None]

    # 整個族群一次更新，與逐一呼叫 raw_velocity 相同
    velocity = (1.0 - alpha) * U - g * X + np.abs(1.0 - 1.0 / i) * rt * (best.best_position - X)

    # 每個空氣團一條獨立亂數串流
    streams = rng.spawn(N)
    if D > 1:
        other_dims = np.stack([draw_other_dimensions(D, s) for s in streams])
        velocity = velocity + c * np.take_along_axis(U, other_dims, axis=1) / i

    velocity = np.clip(velocity, -VELOCITY_MAX, VELOCITY_MAX)
    positions = np.clip(X + velocity, POSITION_MIN, POSITION_MAX)

    moved = [Parcel(position=positions[k], velocity=velocity[k]) for k in range(N)]
    moved = evaluate_population(moved, f, executor)

    candidate = best_from_population(moved)
    if candidate.best_pressure < best.best_pressure:
        best = candidate

    return rank_population(moved), best
