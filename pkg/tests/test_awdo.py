# -*- coding: utf-8 -*-
"""
AWDO 主迴圈測試
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from awdo.exceptions import ConfigError, NumericalError
from awdo.models.parcel import ALPHA_RANGE, C_RANGE, G_RANGE, RT_RANGE
from awdo.models.run import AwdoConfig
from awdo.services.awdo import awdo_run, map_candidate_to_coefficients
from awdo.services.objectives import OBJECTIVES


def sphere_f(D):
    return OBJECTIVES["sphere"].pressure_function(D)


# =====================
# 候選映射
# =====================

def test_map_candidate_clips_to_ranges():
    coeffs = map_candidate_to_coefficients([-0.5, 1.7, 6.0, 2.5])
    assert coeffs.as_tuple() == (0.0, 1.0, 5.0, 2.5)


def test_map_candidate_keeps_values_inside_ranges():
    coeffs = map_candidate_to_coefficients([0.2, 0.4, 3.0, 0.0])
    assert coeffs.as_tuple() == (0.2, 0.4, 3.0, 0.0)


def test_map_candidate_rejects_wrong_length():
    with pytest.raises(ConfigError):
        map_candidate_to_coefficients([0.1, 0.2, 0.3])


def test_map_candidate_rejects_nan():
    with pytest.raises(NumericalError):
        map_candidate_to_coefficients([0.1, float("nan"), 0.3, 0.4])


# =====================
# awdo_run
# =====================

def test_run_history_shape():
    config = AwdoConfig(seed=1, population_n=6, max_iterations=15, init_lo=-1.0, init_hi=1.0)
    result = awdo_run(sphere_f(3), 3, config)

    history = result.history
    assert len(history) == 16
    assert [r.iteration for r in history] == list(range(16))
    assert history.evaluations.tolist() == [6 * t for t in range(16)]
    assert result.initial_evaluations == 6
    assert np.all(np.diff(history.best_pressures) <= 0)
    assert result.best_pressure == history[-1].best_pressure
    assert sphere_f(3)(result.best_position) == result.best_pressure


def test_run_is_deterministic():
    config = AwdoConfig(seed=11, population_n=5, max_iterations=30, init_lo=-1.0, init_hi=1.0)
    a = awdo_run(sphere_f(4), 4, config)
    b = awdo_run(sphere_f(4), 4, config)
    assert a.best_position.tobytes() == b.best_position.tobytes()
    assert a.history.best_pressures.tobytes() == b.history.best_pressures.tobytes()


def test_run_parallel_matches_serial():
    config = AwdoConfig(seed=5, population_n=8, max_iterations=20, init_lo=-1.0, init_hi=1.0)
    serial = awdo_run(sphere_f(4), 4, config)
    with ThreadPoolExecutor(max_workers=3) as executor:
        parallel = awdo_run(sphere_f(4), 4, config, executor=executor)
    assert serial.history.best_pressures.tobytes() == parallel.history.best_pressures.tobytes()


def test_run_stops_immediately_when_target_already_met():
    config = AwdoConfig(seed=0, population_n=4, max_iterations=100, pressure_target=1e30)
    result = awdo_run(sphere_f(2), 2, config)
    assert len(result.history) == 1
    assert result.history[0].evaluations == 0


def test_run_stops_at_target():
    config = AwdoConfig(
        seed=2, population_n=10, max_iterations=5000,
        pressure_target=0.01, init_lo=-1.0, init_hi=1.0,
    )
    result = awdo_run(sphere_f(4), 4, config)
    assert result.best_pressure <= 0.01
    assert len(result.history) < 5001
    assert result.history[-2].best_pressure > 0.01


def test_run_callback_sees_every_iteration():
    seen = []

    def callback(iteration, parcels, coeffs, best):
        seen.append((iteration, len(parcels), len(coeffs)))

    config = AwdoConfig(seed=3, population_n=4, max_iterations=5)
    awdo_run(sphere_f(2), 2, config, callback=callback)

    assert seen[0] == (0, 4, 0)
    assert seen[1:] == [(t, 4, 4) for t in range(1, 6)]


def test_run_keeps_every_coefficient_inside_bounds():
    """CMA-ES 步長很大時，傳給 WDO 的係數仍都在範圍內"""
    bounds = {"alpha": ALPHA_RANGE, "g": G_RANGE, "rt": RT_RANGE, "c": C_RANGE}
    seen = []

    def callback(iteration, parcels, coeffs, best):
        for k in coeffs:
            for name, (lo, hi) in bounds.items():
                value = getattr(k, name)
                assert lo <= value <= hi
                seen.append(value in (lo, hi))

    config = AwdoConfig(seed=11, population_n=8, max_iterations=40, cmaes_sigma0=2.0)
    awdo_run(sphere_f(3), 3, config, callback=callback)

    assert len(seen) == 40 * 8 * 4
    # 有候選真的被截斷到邊界
    assert any(seen)


def test_run_rejects_dimension_mismatch():
    with pytest.raises(ConfigError):
        awdo_run(sphere_f(3), 2, AwdoConfig(seed=0))


def test_config_rejects_bad_init_range():
    with pytest.raises(ValueError):
        AwdoConfig(seed=0, init_lo=0.5, init_hi=0.1)
    with pytest.raises(ValueError):
        AwdoConfig(seed=0, cmaes_mean0=[0.5, 0.5])


@pytest.mark.slow
def test_run_minimizes_sphere():
    finals = []
    for seed in range(10):
        config = AwdoConfig(
            seed=seed, population_n=20, max_iterations=2000, init_lo=-1.0, init_hi=1.0,
        )
        finals.append(awdo_run(sphere_f(10), 10, config).best_pressure)
    assert np.median(finals) < 1e-3
