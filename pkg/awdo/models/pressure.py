# -*- coding: utf-8 -*-
"""
壓力函數 - 優化器看到的目標函數（越低越好）
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ..exceptions import ShapeError


@dataclass(frozen=True)
class PressureFunction:
    """把位置向量映射為壓力值，並記錄維度"""
    fn: Callable[[np.ndarray], float]
    dimension: int
    name: str = "pressure"

    def __call__(self, position: np.ndarray) -> float:
        if position.shape != (self.dimension,):
            raise ShapeError(
                f"{self.name} 需要長度 {self.dimension} 的向量，收到形狀 {position.shape}"
            )
        return float(self.fn(position))
