# -*- coding: utf-8 -*-
"""
測試輔助函數
"""

import numpy as np

from awdo.models.parcel import Parcel
from awdo.services.objectives import OBJECTIVES
from awdo.services.wdo_kernel import (
    best_from_population,
    evaluate_population,
    init_population,
    rank_population,
)


def make_parcel(position, velocity=None, rank=None, pressure=None) -> Parcel:
    position = np.asarray(position, dtype=np.float64)
    if velocity is None:
        velocity = np.zeros_like(position)
    return Parcel(
        position=position,
        velocity=np.asarray(velocity, dtype=np.float64),
        rank=rank,
        pressure=pressure,
    )


def sphere_population(D: int, N: int, seed: int):
    """已評估並排名的 sphere 族群"""
    f = OBJECTIVES["sphere"].pressure_function(D)
    parcels = init_population(D, N, -1.0, 1.0, np.random.default_rng(seed))
    parcels = rank_population(evaluate_population(parcels, f))
    return f, parcels, best_from_population(parcels)
