# -*- coding: utf-8 -*-
"""
AWDO 主迴圈 - CMA-ES 每次迭代為每個空氣團提出一組 WDO 係數

每次迭代：
1. CMA-ES ask 產生 population_n 個 4 維候選
2. 候選 k 映射成係數後交給空氣團 k
3. 執行一次 WDO 迭代
4. 空氣團 k 移動後的壓力作為候選 k 的適應值 tell 回 CMA-ES
5. 追加歷程；達到最大迭代數或 best ≤ pressure_target 時停止
"""

import logging
from concurrent.futures import Executor
from typing import Callable, List, Optional, Sequence

import numpy as np

from ..exceptions import ConfigError, NumericalError
from ..models.cmaes import CmaesConfig
from ..models.parcel import (
    ALPHA_RANGE,
    C_RANGE,
    G_RANGE,
    RT_RANGE,
    BestTracker,
    Parcel,
    WdoCoefficients,
)
from ..models.pressure import PressureFunction
from ..models.run import AwdoConfig, AwdoResult, HistoryRecord, RunHistory
from .cmaes import cmaes_ask, cmaes_init, cmaes_tell
from .wdo_kernel import (
    best_from_population,
    evaluate_population,
    init_population,
    rank_population,
    wdo_step,
)

logger = logging.getLogger(__name__)


# 每次迭代的觀察函數：(迭代, 族群, 係數, 最佳)
IterationCallback = Callable[[int, List[Parcel], List[WdoCoefficients], BestTracker], None]

# 每隔幾次迭代輸出一次進度
PROGRESS_EVERY = 500


def map_candidate_to_coefficients(raw: Sequence[float]) -> WdoCoefficients:
    """CMA-ES 候選（4 維）截斷到係數範圍"""
    raw = np.asarray(raw, dtype=np.float64)
    if raw.shape != (4,):
        raise ConfigError(f"候選必須是 4 維向量，收到形狀 {raw.shape}")
    if not np.all(np.isfinite(raw)):
        raise NumericalError(f"候選 {raw.tolist()} 含非有限值")

    return WdoCoefficients(
        alpha=float(np.clip(raw[0], *ALPHA_RANGE)),
        g=float(np.clip(raw[1], *G_RANGE)),
        rt=float(np.clip(raw[2], *RT_RANGE)),
        c=float(np.clip(raw[3], *C_RANGE)),
    )


def _record(iteration: int, evaluations: int, parcels: Sequence[Parcel], best: BestTracker) -> HistoryRecord:
    return HistoryRecord(
        iteration=iteration,
        evaluations=evaluations,
        best_pressure=best.best_pressure,
        mean_pressure=float(np.mean([p.pressure for p in parcels])),
    )


def awdo_run(
    f: PressureFunction,
    D: int,
    config: AwdoConfig,
    executor: Optional[Executor] = None,
    callback: Optional[IterationCallback] = None,
) -> AwdoResult:
    """
    執行 AWDO

    第 0 次迭代只評估初始族群（不計入 evaluations 欄），之後第 t 次迭代的
    累計評估數為 t × population_n。
    """
    if f.dimension != D:
        raise ConfigError(f"壓力函數維度 {f.dimension} 與 D={D} 不符")

    N = config.population_n
    init_rng, cmaes_rng, wdo_rng = np.random.default_rng(config.seed).spawn(3)

    cmaes_state = cmaes_init(CmaesConfig(
        n=4,
        lam=N,
        mean0=list(config.cmaes_mean0),
        sigma0=config.cmaes_sigma0,
    ))

    logger.info(f"🚀 AWDO 開始：D={D}, N={N}, 最多 {config.max_iterations} 次迭代, seed={config.seed}")

    parcels = init_population(D, N, config.init_lo, config.init_hi, init_rng)
    parcels = rank_population(evaluate_population(parcels, f, executor))
    best = best_from_population(parcels)

    history = RunHistory()
    history.append(_record(0, 0, parcels, best))
    if callback is not None:
        callback(0, parcels, [], best)

    target = config.pressure_target
    if target is not None and best.best_pressure <= target:
        logger.info(f"✅ 初始族群已達目標壓力 {target}")
        return AwdoResult(best.best_position, best.best_pressure, history, initial_evaluations=N)

    for iteration in range(1, config.max_iterations + 1):
        candidates = cmaes_ask(cmaes_state, cmaes_rng)
        coeffs = [map_candidate_to_coefficients(raw) for raw in candidates]

        parcels, best = wdo_step(parcels, coeffs, f, best, wdo_rng, executor)

        # 空氣團 k 的新壓力就是候選 k 的適應值
        fitnesses = [p.pressure for p in parcels]
        cmaes_state = cmaes_tell(cmaes_state, candidates, fitnesses)

        history.append(_record(iteration, iteration * N, parcels, best))
        if callback is not None:
            callback(iteration, parcels, coeffs, best)

        if iteration % PROGRESS_EVERY == 0:
            logger.info(f"🔄 第 {iteration} 次迭代：最佳壓力 {best.best_pressure:.6g}, sigma={cmaes_state.sigma:.3g}")

        if target is not None and best.best_pressure <= target:
            logger.info(f"🎯 第 {iteration} 次迭代達到目標壓力 {target}")
            break

    if cmaes_state.eigen_floor_events:
        logger.warning(f"⚠️ CMA-ES 特徵值下限觸發 {cmaes_state.eigen_floor_events} 次")

    logger.info(f"✅ AWDO 結束：{history[-1].iteration} 次迭代，最佳壓力 {best.best_pressure:.6g}")
    return AwdoResult(best.best_position, best.best_pressure, history, initial_evaluations=N)
