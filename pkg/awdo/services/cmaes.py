# -*- coding: utf-8 -*-
"""
CMA-ES 黑箱優化 - ask / tell 介面

(mu/mu_w, lambda) 標準版本：秩一與秩 mu 共變異數更新、累積步長調整，
每代都重新做特徵分解（n = 4 時成本可忽略）。
不含重新啟動、負權重與邊界處理；越低越好。
"""

import logging
import math
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import ConfigError, MatrixError, NumericalError
from ..models.cmaes import CmaesConfig, CmaesState
from ..models.run import HistoryRecord, RunHistory

logger = logging.getLogger(__name__)


# 特徵值下限
EIGEN_FLOOR = 1e-20

# Jacobi 迭代
JACOBI_MAX_SWEEPS = 100
SYMMETRY_TOLERANCE = 1e-9


def default_lambda(n: int) -> int:
    """預設族群大小 4 + floor(3 ln n)"""
    return 4 + int(3 * math.log(n))


def recombination_weights(lam: int) -> np.ndarray:
    """w_i ∝ ln(mu + 1/2) - ln(i)，i = 1..mu，總和為 1"""
    mu = lam // 2
    raw = math.log(mu + 0.5) - np.log(np.arange(1, mu + 1))
    return raw / raw.sum()


def sym_eigen(M: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    對稱矩陣特徵分解（循環 Jacobi 旋轉）

    Returns:
        (特徵值由小到大, 對應的正交特徵向量矩陣，第 k 欄對應第 k 個特徵值)
    """
    A = np.array(M, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise MatrixError(f"需要方陣，收到形狀 {A.shape}")
    scale = max(1.0, float(np.max(np.abs(A)))) if A.size else 1.0
    if np.max(np.abs(A - A.T), initial=0.0) > SYMMETRY_TOLERANCE * scale:
        raise MatrixError("矩陣不對稱")

    n = A.shape[0]
    A = (A + A.T) / 2.0
    V = np.eye(n)
    norm = np.linalg.norm(A)

    for _ in range(JACOBI_MAX_SWEEPS):
        # 非對角元素的 Frobenius 範數
        off = float(np.linalg.norm(A - np.diag(np.diag(A))))
        if off <= 1e-14 * norm or off == 0.0:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                gap = A[q, q] - A[p, p]
                if abs(gap) + 100.0 * abs(apq) == abs(gap):
                    # apq 相對於對角差可忽略：tan 取一階近似
                    t = apq / gap
                else:
                    theta = gap / (2.0 * apq)
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c

                # A ← Jᵀ A J，V ← V J
                col_p, col_q = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p, row_q = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0

                vec_p, vec_q = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vec_p - s * vec_q
                V[:, q] = s * vec_p + c * vec_q

    eigenvalues = np.diag(A).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return eigenvalues[order], V[:, order]


def cmaes_init(config: CmaesConfig) -> CmaesState:
    """建立初始狀態：C = I，演化路徑為 0"""
    n = config.n
    lam = config.lam
    weights = recombination_weights(lam)
    mu_eff = 1.0 / float(np.sum(weights ** 2))

    c_sigma = (mu_eff + 2.0) / (n + mu_eff + 5.0)
    d_sigma = 1.0 + 2.0 * max(0.0, math.sqrt((mu_eff - 1.0) / (n + 1.0)) - 1.0) + c_sigma
    c_c = (4.0 + mu_eff / n) / (n + 4.0 + 2.0 * mu_eff / n)
    c_1 = 2.0 / ((n + 1.3) ** 2 + mu_eff)
    c_mu = min(1.0 - c_1, 2.0 * (mu_eff - 2.0 + 1.0 / mu_eff) / ((n + 2.0) ** 2 + mu_eff))
    chi_n = math.sqrt(n) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n * n))

    return CmaesState(
        mean=np.array(config.mean0, dtype=np.float64),
        sigma=float(config.sigma0),
        C=np.eye(n),
        p_sigma=np.zeros(n),
        p_c=np.zeros(n),
        B=np.eye(n),
        d=np.ones(n),
        generation=0,
        weights=weights,
        mu_eff=mu_eff,
        c_sigma=c_sigma,
        d_sigma=d_sigma,
        c_c=c_c,
        c_1=c_1,
        c_mu=c_mu,
        chi_n=chi_n,
        lam=lam,
    )


def cmaes_ask(state: CmaesState, rng: np.random.Generator) -> np.ndarray:
    """
    取樣 lambda 個候選：mean + sigma · B · diag(d) · z

    Returns:
        lambda × n 矩陣，每列一個候選
    """
    z = rng.standard_normal(size=(state.lam, state.n))
    return state.mean + state.sigma * (z * state.d) @ state.B.T


def cmaes_tell(
    state: CmaesState,
    candidates: np.ndarray,
    fitnesses: Sequence[float],
) -> CmaesState:
    """
    依適應值更新分布（只看排序）

    candidates 必須是上一次 ask 的輸出，fitnesses 越低越好。
    """
    candidates = np.asarray(candidates, dtype=np.float64)
    fitnesses = np.asarray(fitnesses, dtype=np.float64)
    if candidates.shape != (state.lam, state.n):
        raise ConfigError(f"候選形狀 {candidates.shape} 應為 {(state.lam, state.n)}")
    if fitnesses.shape != (state.lam,):
        raise ConfigError(f"適應值個數 {fitnesses.shape[0] if fitnesses.ndim else 0} 應為 {state.lam}")
    if not np.all(np.isfinite(fitnesses)):
        bad = int(np.flatnonzero(~np.isfinite(fitnesses))[0])
        raise NumericalError(f"候選 {bad} 的適應值 {fitnesses[bad]} 不是有限值")

    new = state.copy()
    n = state.n
    mu = state.mu
    w = state.weights

    order = np.argsort(fitnesses, kind="stable")
    y = (candidates[order[:mu]] - state.mean) / state.sigma
    y_w = w @ y

    new.mean = state.mean + state.sigma * y_w

    # C^(-1/2) = B diag(1/d) Bᵀ
    inv_sqrt_C = state.B @ np.diag(1.0 / state.d) @ state.B.T
    new.p_sigma = (1.0 - state.c_sigma) * state.p_sigma + math.sqrt(
        state.c_sigma * (2.0 - state.c_sigma) * state.mu_eff
    ) * (inv_sqrt_C @ y_w)

    norm_p_sigma = float(np.linalg.norm(new.p_sigma))
    generation = state.generation + 1
    h_sigma = (
        norm_p_sigma / math.sqrt(1.0 - (1.0 - state.c_sigma) ** (2 * generation))
        < (1.4 + 2.0 / (n + 1.0)) * state.chi_n
    )
    h = 1.0 if h_sigma else 0.0

    new.p_c = (1.0 - state.c_c) * state.p_c + h * math.sqrt(
        state.c_c * (2.0 - state.c_c) * state.mu_eff
    ) * y_w

    delta_h = (1.0 - h) * state.c_c * (2.0 - state.c_c)
    rank_one = np.outer(new.p_c, new.p_c)
    rank_mu = (y.T * w) @ y
    C = (
        (1.0 + state.c_1 * delta_h - state.c_1 - state.c_mu * float(w.sum())) * state.C
        + state.c_1 * rank_one
        + state.c_mu * rank_mu
    )
    C = (C + C.T) / 2.0

    new.sigma = state.sigma * math.exp(
        (state.c_sigma / state.d_sigma) * (norm_p_sigma / state.chi_n - 1.0)
    )

    eigenvalues, B = sym_eigen(C)
    floored = eigenvalues < EIGEN_FLOOR
    if np.any(floored):
        new.eigen_floor_events = state.eigen_floor_events + int(floored.sum())
        logger.warning(f"⚠️ CMA-ES 第 {generation} 代特徵值過小，已設為下限 {EIGEN_FLOOR}")
        eigenvalues = np.maximum(eigenvalues, EIGEN_FLOOR)
        C = (B * eigenvalues) @ B.T
        C = (C + C.T) / 2.0

    new.C = C
    new.B = B
    new.d = np.sqrt(eigenvalues)
    new.generation = generation
    return new


def cmaes_minimize(
    f: Callable[[np.ndarray], float],
    config: CmaesConfig,
    max_generations: int,
    rng: np.random.Generator,
    target: Optional[float] = None,
) -> Tuple[np.ndarray, float, RunHistory]:
    """
    以 ask / tell 迴圈最小化 f

    Returns:
        (最佳點, 最佳值, 每代歷程)
    """
    state = cmaes_init(config)
    history = RunHistory()
    best_x = np.array(config.mean0, dtype=np.float64)
    best_f = math.inf

    logger.info(f"🚀 CMA-ES 開始：n={config.n}, lambda={config.lam}, 最多 {max_generations} 代")

    for generation in range(1, max_generations + 1):
        candidates = cmaes_ask(state, rng)
        fitnesses = [float(f(x)) for x in candidates]
        state = cmaes_tell(state, candidates, fitnesses)

        k = int(np.argmin(fitnesses))
        if fitnesses[k] < best_f:
            best_f = fitnesses[k]
            best_x = candidates[k].copy()

        history.append(HistoryRecord(
            iteration=generation,
            evaluations=generation * config.lam,
            best_pressure=best_f,
            mean_pressure=float(np.mean(fitnesses)),
        ))

        if target is not None and best_f <= target:
            break

    logger.info(f"✅ CMA-ES 結束：{len(history)} 代，最佳值 {best_f:.6g}")
    return best_x, best_f, history
