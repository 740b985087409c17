# -*- coding: utf-8 -*-
"""
基準目標函數 - 不依賴神經網路即可驗證優化器
"""

from dataclasses import dataclass
from typing import Callable, Dict, List

import numpy as np

from ..exceptions import ConfigError
from ..models.pressure import PressureFunction


def sphere(x: np.ndarray) -> float:
    """Σ x²"""
    x = np.asarray(x, dtype=np.float64)
    return float(np.sum(x * x))


def rosenbrock(x: np.ndarray) -> float:
    """Σ [100 (x_{d+1} - x_d²)² + (1 - x_d)²]"""
    x = np.asarray(x, dtype=np.float64)
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def rastrigin(x: np.ndarray) -> float:
    """10 D + Σ [x² - 10 cos(2π x)]"""
    x = np.asarray(x, dtype=np.float64)
    return float(10.0 * x.shape[0] + np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x)))


@dataclass(frozen=True)
class BenchObjective:
    """已知最小值的基準函數"""
    name: str
    fn: Callable[[np.ndarray], float]
    minimum_at: float   # 最小值位置的每個座標
    minimum_value: float = 0.0

    def known_minimum(self, dimension: int) -> tuple:
        return np.full(dimension, self.minimum_at), self.minimum_value

    def pressure_function(self, dimension: int) -> PressureFunction:
        if dimension < 1:
            raise ConfigError(f"維度 {dimension} 必須 ≥ 1")
        return PressureFunction(fn=self.fn, dimension=dimension, name=self.name)


# 依名稱註冊（CLI bench 使用）
OBJECTIVES: Dict[str, BenchObjective] = {
    "sphere": BenchObjective("sphere", sphere, minimum_at=0.0),
    "rosenbrock": BenchObjective("rosenbrock", rosenbrock, minimum_at=1.0),
    "rastrigin": BenchObjective("rastrigin", rastrigin, minimum_at=0.0),
}


def list_objectives() -> List[str]:
    return sorted(OBJECTIVES)


def get_objective(name: str) -> BenchObjective:
    """依名稱取得基準函數"""
    if name not in OBJECTIVES:
        raise ConfigError(f"未知的目標函數 '{name}'，可用：{', '.join(list_objectives())}")
    return OBJECTIVES[name]
