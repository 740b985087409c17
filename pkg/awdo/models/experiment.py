# -*- coding: utf-8 -*-
"""
實驗設定模型 - JSON 設定檔結構（未知欄位一律拒絕）
"""

import enum
import json
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..exceptions import ConfigError
from .network import NetworkShape
from .run import AwdoConfig, AwdoOptions, GdConfig, GdOptions


class DatasetSource(str, enum.Enum):
    """資料來源"""
    MNIST = "mnist"           # IDX 檔
    SYNTHETIC = "synthetic"   # 測試用合成資料


class OptimizerName(str, enum.Enum):
    """bench 可用的優化器"""
    AWDO = "awdo"
    CMAES = "cmaes"


class BenchOptions(BaseModel):
    """基準測試參數（設定檔 bench 區段）"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    dimension: int = Field(default=10, ge=1)
    population_n: int = Field(default=20, ge=2)
    max_iterations: int = Field(default=200, ge=1)
    pressure_target: Optional[float] = None
    init_lo: float = -1.0
    init_hi: float = 1.0
    cmaes_lambda: Optional[int] = Field(default=None, ge=2)   # None = 4 + floor(3 ln n)
    cmaes_start: float = 0.5
    cmaes_sigma0: float = Field(default=0.3, gt=0)


class ExperimentConfig(BaseModel):
    """實驗設定"""
    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    seed: int
    output_dir: str = "results"
    dataset: DatasetSource = DatasetSource.MNIST
    images_path: Optional[str] = None
    labels_path: Optional[str] = None
    subset_size: int = Field(default=5000, ge=1)
    synthetic_m: int = Field(default=50, ge=1)
    synthetic_separability: float = Field(default=1.0, ge=0, le=1)
    reg_lambda: float = Field(default=0.01, ge=0, alias="lambda")
    threads: int = Field(default=1, ge=1)
    network: NetworkShape = Field(default_factory=NetworkShape)
    awdo: AwdoOptions = Field(default_factory=AwdoOptions)
    gd: GdOptions = Field(default_factory=GdOptions)
    bench: BenchOptions = Field(default_factory=BenchOptions)

    @model_validator(mode="after")
    def check_dataset_paths(self):
        if self.dataset == DatasetSource.MNIST and (self.images_path is None) != (self.labels_path is None):
            raise ValueError("images_path 與 labels_path 必須同時指定")
        return self

    def awdo_config(self) -> AwdoConfig:
        return AwdoConfig(seed=self.seed, **self.awdo.model_dump())

    def gd_config(self) -> GdConfig:
        return GdConfig(seed=self.seed, reg_lambda=self.reg_lambda, **self.gd.model_dump())

    @property
    def output_path(self) -> Path:
        return Path(self.output_dir)


def load_experiment_config(path) -> ExperimentConfig:
    """讀取 JSON 設定檔"""
    path = Path(path)
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ConfigError(f"找不到設定檔：{path}")
    except json.JSONDecodeError as e:
        raise ConfigError(f"設定檔不是合法 JSON：{path}（第 {e.lineno} 行）")

    if not isinstance(document, dict):
        raise ConfigError("設定檔最外層必須是物件")

    try:
        return ExperimentConfig.model_validate(document)
    except ValidationError as e:
        raise ConfigError(f"設定檔內容錯誤：{path}\n{e}")
