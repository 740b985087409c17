# -*- coding: utf-8 -*-
"""
報表指令 - 權重影像、樣本影像、收斂比較
"""

import argparse
import logging
from typing import List, Optional, Tuple

from ..exceptions import DataError
from ..models.experiment import ExperimentConfig
from ..models.network import NetworkShape
from ..services.analysis import convergence_ratio, iterations_to_accuracy
from ..services.export import read_csv, read_params_file
from ..services.neural_net import unflatten
from ..services.render import render_samples, render_weights, save_pgm
from .common import experiment_streams, load_config, load_dataset

logger = logging.getLogger(__name__)


def cmd_render_weights(params_file: str, shape: NetworkShape, out_pgm: str) -> int:
    """隱藏層權重排成格狀 PGM"""
    params = unflatten(read_params_file(params_file), shape)
    image = render_weights(params)
    path = save_pgm(image, out_pgm)
    print(f"🖼️ 權重影像 {image.shape[1]}×{image.shape[0]} → {path}")
    return 0


def cmd_render_samples(config: ExperimentConfig, out_pgm: str, count: int = 100) -> int:
    """訓練集前 count 張影像排成格狀 PGM"""
    data_rng, _ = experiment_streams(config)
    data = load_dataset(config, data_rng)
    image = render_samples(data, count)
    path = save_pgm(image, out_pgm)
    print(f"🖼️ 樣本影像 {image.shape[1]}×{image.shape[0]} → {path}")
    return 0


def _accuracy_column(rows: List[dict], column: str, path: str) -> List[Tuple[int, float]]:
    if rows and column not in rows[0]:
        raise DataError(f"{path} 缺少欄位 {column}")
    return [(int(r["iteration"]), r[column]) for r in rows]


def cmd_compare(gd_csv: str, awdo_csv: str, threshold: float) -> int:
    """比較兩種方法達到準確率門檻所需的迭代數"""
    gd = _accuracy_column(read_csv(gd_csv), "train_accuracy", gd_csv)
    awdo = _accuracy_column(read_csv(awdo_csv), "train_accuracy_of_best", awdo_csv)

    gd_iter = iterations_to_accuracy(gd, threshold)
    awdo_iter = iterations_to_accuracy(awdo, threshold)
    ratio: Optional[float] = convergence_ratio(gd, awdo, threshold)

    print(f"準確率門檻 {threshold}")
    print(f"  梯度下降：{gd_iter if gd_iter is not None else '未達到'}")
    print(f"  AWDO：{awdo_iter if awdo_iter is not None else '未達到'}")
    if ratio is not None:
        print(f"  迭代數比 AWDO / GD = {ratio:.1f}")
    return 0


def _handle_render_weights(args: argparse.Namespace) -> int:
    shape = load_config(args.config).network if args.config else NetworkShape()
    return cmd_render_weights(args.params, shape, args.out)


def _handle_render_samples(args: argparse.Namespace) -> int:
    return cmd_render_samples(load_config(args.config), args.out, args.count)


def _handle_compare(args: argparse.Namespace) -> int:
    return cmd_compare(args.gd, args.awdo, args.threshold)


def register(subparsers) -> None:
    weights = subparsers.add_parser("render-weights", help="輸出隱藏層權重影像")
    weights.add_argument("--params", required=True, help="權重檔")
    weights.add_argument("--out", required=True, help="輸出 PGM 檔")
    weights.add_argument("--config", default=None, help="讀取網路形狀的設定檔（預設 400-25-10）")
    weights.set_defaults(handler=_handle_render_weights)

    samples = subparsers.add_parser("render-samples", help="輸出訓練集樣本影像")
    samples.add_argument("--config", required=True, help="JSON 設定檔")
    samples.add_argument("--out", required=True, help="輸出 PGM 檔")
    samples.add_argument("--count", type=int, default=100, help="張數")
    samples.set_defaults(handler=_handle_render_samples)

    compare = subparsers.add_parser("compare", help="比較 GD 與 AWDO 收斂速度")
    compare.add_argument("--gd", required=True, help="gd_history.csv")
    compare.add_argument("--awdo", required=True, help="awdo_history.csv")
    compare.add_argument("--threshold", type=float, default=0.95, help="準確率門檻")
    compare.set_defaults(handler=_handle_compare)
