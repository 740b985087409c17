# -*- coding: utf-8 -*-
"""
執行模型 - AWDO / 梯度下降設定與歷程紀錄
"""

from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .parcel import POSITION_MAX, POSITION_MIN


class AwdoOptions(BaseModel):
    """AWDO 參數（設定檔 awdo 區段）"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    population_n: int = Field(default=25, ge=2)        # 空氣團數，也是 CMA-ES lambda
    max_iterations: int = Field(default=10000, ge=1)
    pressure_target: Optional[float] = None            # best ≤ target 時停止
    init_lo: float = -0.12
    init_hi: float = 0.12
    cmaes_mean0: List[float] = Field(default_factory=lambda: [0.5, 0.5, 0.5, 0.5])
    cmaes_sigma0: float = Field(default=0.3, gt=0)

    @model_validator(mode="after")
    def check_ranges(self):
        if not self.init_lo < self.init_hi:
            raise ValueError(f"init_lo={self.init_lo} 必須小於 init_hi={self.init_hi}")
        if self.init_lo < POSITION_MIN or self.init_hi > POSITION_MAX:
            raise ValueError("初始範圍必須落在 [-1, 1] 之內")
        if len(self.cmaes_mean0) != 4:
            raise ValueError("cmaes_mean0 必須有 4 個值")
        return self


class AwdoConfig(AwdoOptions):
    """AWDO 完整設定（含亂數種子）"""
    seed: int


class GdOptions(BaseModel):
    """梯度下降參數（設定檔 gd 區段）"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    max_iterations: int = Field(default=400, ge=1)
    initial_step: float = Field(default=1.0, gt=0)
    armijo_beta: float = Field(default=0.5, gt=0, lt=1)
    armijo_c: float = Field(default=1e-4, gt=0, lt=1)
    max_halvings: int = Field(default=40, ge=1)


class GdConfig(GdOptions):
    """梯度下降完整設定"""
    reg_lambda: float = Field(default=0.01, ge=0, alias="lambda")
    seed: int

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)


@dataclass(frozen=True)
class HistoryRecord:
    """一次迭代的紀錄"""
    iteration: int
    evaluations: int
    best_pressure: float
    mean_pressure: float


@dataclass
class RunHistory:
    """只能追加的迭代歷程"""
    records: List[HistoryRecord] = field(default_factory=list)

    def append(self, record: HistoryRecord) -> None:
        self.records.append(record)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def __getitem__(self, index):
        return self.records[index]

    @property
    def best_pressures(self) -> np.ndarray:
        return np.array([r.best_pressure for r in self.records])

    @property
    def evaluations(self) -> np.ndarray:
        return np.array([r.evaluations for r in self.records], dtype=np.int64)


@dataclass
class AwdoResult:
    """AWDO 執行結果"""
    best_position: np.ndarray
    best_pressure: float
    history: RunHistory
    initial_evaluations: int = 0


@dataclass(frozen=True)
class GdRecord:
    """梯度下降單次迭代紀錄"""
    iteration: int
    cost: float
    train_accuracy: float
    step: float = 0.0
    hit_halving_cap: bool = False
