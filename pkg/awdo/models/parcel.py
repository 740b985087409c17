# -*- coding: utf-8 -*-
"""
空氣團模型 - WDO 族群成員、係數與全域最佳紀錄
"""

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from ..exceptions import ConfigError


# 搜尋範圍與速度上限
POSITION_MIN = -1.0
POSITION_MAX = 1.0
VELOCITY_MAX = 0.3

# 係數範圍
ALPHA_RANGE = (0.0, 1.0)   # 摩擦
G_RANGE = (0.0, 1.0)       # 重力
RT_RANGE = (0.0, 5.0)      # 氣體常數 × 溫度
C_RANGE = (0.0, 5.0)       # 科氏力


@dataclass(frozen=True)
class WdoCoefficients:
    """WDO 的四個可調係數"""
    alpha: float
    g: float
    rt: float
    c: float

    def __post_init__(self):
        for name, (lo, hi) in (
            ("alpha", ALPHA_RANGE),
            ("g", G_RANGE),
            ("rt", RT_RANGE),
            ("c", C_RANGE),
        ):
            value = getattr(self, name)
            if not math.isfinite(value) or not lo <= value <= hi:
                raise ConfigError(f"係數 {name}={value} 超出範圍 [{lo}, {hi}]")

    def as_tuple(self) -> tuple:
        return (self.alpha, self.g, self.rt, self.c)


@dataclass
class Parcel:
    """空氣團：位置、速度、壓力與排名"""
    position: np.ndarray
    velocity: np.ndarray
    pressure: Optional[float] = None   # None = 尚未評估
    rank: Optional[int] = None         # 1 = 壓力最低

    @property
    def dimension(self) -> int:
        return int(self.position.shape[0])

    @property
    def is_evaluated(self) -> bool:
        return self.pressure is not None

    def __repr__(self):
        return f"<Parcel rank={self.rank} pressure={self.pressure}>"


@dataclass
class BestTracker:
    """目前為止找到的最低壓力點（x_max）"""
    best_position: np.ndarray
    best_pressure: float = field(default=math.inf)

    def __repr__(self):
        return f"<BestTracker pressure={self.best_pressure}>"
