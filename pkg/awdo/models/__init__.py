# -*- coding: utf-8 -*-
"""
資料模型
"""

from .parcel import (
    Parcel,
    BestTracker,
    WdoCoefficients,
    POSITION_MIN,
    POSITION_MAX,
    VELOCITY_MAX,
)
from .pressure import PressureFunction
from .cmaes import CmaesConfig, CmaesState
from .network import NetworkShape, NetworkParams, Dataset, RawMnist
from .run import (
    AwdoOptions,
    AwdoConfig,
    AwdoResult,
    GdOptions,
    GdConfig,
    GdRecord,
    HistoryRecord,
    RunHistory,
)
from .experiment import (
    BenchOptions,
    DatasetSource,
    ExperimentConfig,
    OptimizerName,
    load_experiment_config,
)
