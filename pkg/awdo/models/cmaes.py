# -*- coding: utf-8 -*-
"""
CMA-ES 模型 - 設定與演化狀態
"""

from dataclasses import dataclass
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator


class CmaesConfig(BaseModel):
    """CMA-ES 設定"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    n: int = Field(ge=1)                 # 搜尋維度（調 WDO 時為 4）
    lam: int = Field(ge=2)               # 每代候選數
    mean0: List[float]
    sigma0: float = Field(gt=0)

    @model_validator(mode="after")
    def check_mean_length(self):
        if len(self.mean0) != self.n:
            raise ValueError(f"mean0 長度 {len(self.mean0)} 與 n={self.n} 不符")
        return self


@dataclass
class CmaesState:
    """
    CMA-ES 完整狀態

    學習常數依照常見的 (mu/mu_w, lambda) 預設公式：
        mu       = floor(lambda / 2)
        w_i      ∝ ln(mu + 1/2) - ln(i)，正規化總和為 1
        mu_eff   = 1 / sum(w_i^2)
        c_sigma  = (mu_eff + 2) / (n + mu_eff + 5)
        d_sigma  = 1 + 2 max(0, sqrt((mu_eff - 1) / (n + 1)) - 1) + c_sigma
        c_c      = (4 + mu_eff / n) / (n + 4 + 2 mu_eff / n)
        c_1      = 2 / ((n + 1.3)^2 + mu_eff)
        c_mu     = min(1 - c_1, 2 (mu_eff - 2 + 1 / mu_eff) / ((n + 2)^2 + mu_eff))
        chi_n    = sqrt(n) (1 - 1 / (4n) + 1 / (21 n^2))
    """
    mean: np.ndarray
    sigma: float
    C: np.ndarray
    p_sigma: np.ndarray
    p_c: np.ndarray
    B: np.ndarray
    d: np.ndarray
    generation: int
    weights: np.ndarray
    mu_eff: float
    c_sigma: float
    d_sigma: float
    c_c: float
    c_1: float
    c_mu: float
    chi_n: float
    lam: int
    eigen_floor_events: int = 0

    @property
    def n(self) -> int:
        return int(self.mean.shape[0])

    @property
    def mu(self) -> int:
        return int(self.weights.shape[0])

    def copy(self) -> "CmaesState":
        return CmaesState(
            mean=self.mean.copy(),
            sigma=self.sigma,
            C=self.C.copy(),
            p_sigma=self.p_sigma.copy(),
            p_c=self.p_c.copy(),
            B=self.B.copy(),
            d=self.d.copy(),
            generation=self.generation,
            weights=self.weights.copy(),
            mu_eff=self.mu_eff,
            c_sigma=self.c_sigma,
            d_sigma=self.d_sigma,
            c_c=self.c_c,
            c_1=self.c_1,
            c_mu=self.c_mu,
            chi_n=self.chi_n,
            lam=self.lam,
            eigen_floor_events=self.eigen_floor_events,
        )

    def __repr__(self):
        return f"<CmaesState gen={self.generation} sigma={self.sigma:.3g}>"
