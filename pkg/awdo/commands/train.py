# -*- coding: utf-8 -*-
"""
train-gd / train-awdo 指令 - 在訓練集上訓練網路並輸出歷程與權重
"""

import argparse
import logging
from typing import Dict, List

from ..models.experiment import ExperimentConfig
from ..models.parcel import BestTracker, Parcel, WdoCoefficients
from ..services.awdo import awdo_run
from ..services.baseline_gd import gd_train
from ..services.export import AWDO_HEADER, GD_HEADER, gd_rows, write_csv, write_params_file
from ..services.neural_net import (
    INIT_RANGE,
    accuracy,
    flatten,
    init_params,
    make_pressure_function,
    predict,
    unflatten,
)
from .common import executor_for, experiment_streams, load_config, load_dataset

logger = logging.getLogger(__name__)


GD_HISTORY_FILE = "gd_history.csv"
GD_PARAMS_FILE = "gd_params.bin"
AWDO_HISTORY_FILE = "awdo_history.csv"
AWDO_PARAMS_FILE = "awdo_params.bin"


def cmd_train_gd(config: ExperimentConfig) -> int:
    """梯度下降訓練，輸出 gd_history.csv 與 gd_params.bin"""
    data_rng, init_rng = experiment_streams(config)
    data = load_dataset(config, data_rng)

    params0 = init_params(config.network, *INIT_RANGE, init_rng)
    trained, history = gd_train(params0, data, config.gd_config())

    out = config.output_path
    write_csv(out / GD_HISTORY_FILE, GD_HEADER, gd_rows(history))
    write_params_file(out / GD_PARAMS_FILE, flatten(trained))

    last = history[-1]
    print(f"✅ 梯度下降：{last.iteration} 次迭代，成本 {last.cost:.6f}，訓練準確率 {last.train_accuracy:.4f}")
    return 0


def cmd_train_awdo(config: ExperimentConfig) -> int:
    """AWDO 訓練，輸出 awdo_history.csv 與 awdo_params.bin"""
    data_rng, _ = experiment_streams(config)
    data = load_dataset(config, data_rng)
    shape = config.network
    f = make_pressure_function(shape, data, config.reg_lambda)

    # 只有最佳點改變時才重算準確率
    accuracy_by_iteration: Dict[int, float] = {}
    cache = {"best": None, "accuracy": 0.0}

    def track_accuracy(iteration: int, parcels: List[Parcel], coeffs: List[WdoCoefficients], best: BestTracker) -> None:
        if best is not cache["best"]:
            cache["best"] = best
            cache["accuracy"] = accuracy(predict(unflatten(best.best_position, shape), data.X), data.labels)
        accuracy_by_iteration[iteration] = cache["accuracy"]

    with executor_for(config.threads) as executor:
        result = awdo_run(f, f.dimension, config.awdo_config(), executor=executor, callback=track_accuracy)

    rows = [
        (r.iteration, r.evaluations, r.best_pressure, accuracy_by_iteration[r.iteration])
        for r in result.history
    ]
    out = config.output_path
    write_csv(out / AWDO_HISTORY_FILE, AWDO_HEADER, rows)
    write_params_file(out / AWDO_PARAMS_FILE, result.best_position)

    print(
        f"✅ AWDO：{result.history[-1].iteration} 次迭代，最佳壓力 {result.best_pressure:.6f}，"
        f"訓練準確率 {rows[-1][3]:.4f}"
    )
    return 0


def _handle_gd(args: argparse.Namespace) -> int:
    return cmd_train_gd(load_config(args.config))


def _handle_awdo(args: argparse.Namespace) -> int:
    return cmd_train_awdo(load_config(args.config))


def register(subparsers) -> None:
    gd = subparsers.add_parser("train-gd", help="以梯度下降訓練網路")
    gd.add_argument("--config", required=True, help="JSON 設定檔")
    gd.set_defaults(handler=_handle_gd)

    awdo = subparsers.add_parser("train-awdo", help="以 AWDO 訓練網路")
    awdo.add_argument("--config", required=True, help="JSON 設定檔")
    awdo.set_defaults(handler=_handle_awdo)
