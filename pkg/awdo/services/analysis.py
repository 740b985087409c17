# -*- coding: utf-8 -*-
"""
收斂比較 - 兩種方法達到同一準確率所需的迭代數
"""

from typing import Iterable, Optional, Tuple


def iterations_to_accuracy(records: Iterable[Tuple[int, float]], threshold: float) -> Optional[int]:
    """第一個準確率 ≥ threshold 的迭代，從未達到則回傳 None"""
    for iteration, acc in records:
        if acc >= threshold:
            return int(iteration)
    return None


def convergence_ratio(
    gd_records: Iterable[Tuple[int, float]],
    awdo_records: Iterable[Tuple[int, float]],
    threshold: float,
) -> Optional[float]:
    """
    AWDO 迭代數 / GD 迭代數

    任一方未達到門檻時回傳 None；GD 在第 0 次就達到時以 1 次計算。
    """
    gd = iterations_to_accuracy(gd_records, threshold)
    awdo = iterations_to_accuracy(awdo_records, threshold)
    if gd is None or awdo is None:
        return None
    return max(awdo, 1) / max(gd, 1)
