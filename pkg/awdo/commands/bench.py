# -*- coding: utf-8 -*-
"""
bench 指令 - 在基準函數上執行 AWDO 或 CMA-ES
"""

import argparse
import logging

import numpy as np

from ..exceptions import ConfigError
from ..models.cmaes import CmaesConfig
from ..models.experiment import ExperimentConfig, OptimizerName
from ..models.run import AwdoConfig
from ..services.awdo import awdo_run
from ..services.cmaes import cmaes_minimize, default_lambda
from ..services.export import BENCH_HEADER, bench_rows, write_csv
from ..services.objectives import get_objective
from .common import executor_for, load_config

logger = logging.getLogger(__name__)


def cmd_bench(objective_name: str, optimizer: str, config: ExperimentConfig) -> int:
    """
    執行基準測試，輸出 <output_dir>/bench_<objective>_<optimizer>.csv
    """
    objective = get_objective(objective_name)
    try:
        optimizer = OptimizerName(optimizer)
    except ValueError:
        raise ConfigError(f"未知的優化器 '{optimizer}'，可用：{', '.join(o.value for o in OptimizerName)}")

    bench = config.bench
    D = bench.dimension
    f = objective.pressure_function(D)

    if optimizer == OptimizerName.AWDO:
        awdo_config = AwdoConfig(
            seed=config.seed,
            population_n=bench.population_n,
            max_iterations=bench.max_iterations,
            pressure_target=bench.pressure_target,
            init_lo=bench.init_lo,
            init_hi=bench.init_hi,
            cmaes_mean0=config.awdo.cmaes_mean0,
            cmaes_sigma0=config.awdo.cmaes_sigma0,
        )
        with executor_for(config.threads) as executor:
            result = awdo_run(f, D, awdo_config, executor=executor)
        history, best = result.history, result.best_pressure
    else:
        cmaes_config = CmaesConfig(
            n=D,
            lam=bench.cmaes_lambda or default_lambda(D),
            mean0=[bench.cmaes_start] * D,
            sigma0=bench.cmaes_sigma0,
        )
        _, best, history = cmaes_minimize(
            f,
            cmaes_config,
            bench.max_iterations,
            np.random.default_rng(config.seed),
            target=bench.pressure_target,
        )

    path = write_csv(
        config.output_path / f"bench_{objective.name}_{optimizer.value}.csv",
        BENCH_HEADER,
        bench_rows(history),
    )
    print(f"✅ {objective.name} / {optimizer.value}：最佳壓力 {best:.6g} → {path}")
    return 0


def _handle(args: argparse.Namespace) -> int:
    return cmd_bench(args.objective, args.optimizer, load_config(args.config))


def register(subparsers) -> None:
    parser = subparsers.add_parser("bench", help="在基準函數上測試優化器")
    parser.add_argument("objective", help="目標函數名稱（sphere / rosenbrock / rastrigin）")
    parser.add_argument("optimizer", help="awdo 或 cmaes")
    parser.add_argument("--config", default=None, help="JSON 設定檔（省略時用預設值，seed 0）")
    parser.set_defaults(handler=_handle)
