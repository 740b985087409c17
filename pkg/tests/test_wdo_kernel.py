# -*- coding: utf-8 -*-
"""
WDO 核心測試
"""

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
import pytest

from awdo.exceptions import ConfigError, PressureError
from awdo.models.parcel import BestTracker, WdoCoefficients
from awdo.models.pressure import PressureFunction
from awdo.services.wdo_kernel import (
    draw_other_dimensions,
    init_population,
    rank_population,
    raw_velocity,
    update_position,
    update_velocity,
    wdo_step,
)

from .helpers import make_parcel, sphere_population


def random_coeffs(rng, n):
    return [
        WdoCoefficients(
            alpha=float(rng.uniform(0, 1)),
            g=float(rng.uniform(0, 1)),
            rt=float(rng.uniform(0, 5)),
            c=float(rng.uniform(0, 5)),
        )
        for _ in range(n)
    ]


# =====================
# init_population
# =====================

def test_init_population_within_init_range():
    parcels = init_population(3, 2, -0.12, 0.12, np.random.default_rng(7))
    assert len(parcels) == 2
    for p in parcels:
        assert p.position.shape == (3,)
        assert np.all(p.position >= -0.12) and np.all(p.position <= 0.12)
        assert np.all(p.velocity == 0.0)
        assert p.pressure is None
        assert p.rank is None


@pytest.mark.parametrize("lo, hi", [(0.0, 0.0), (0.5, -0.5), (-2.0, 0.5), (-0.5, 1.5)])
def test_init_population_rejects_bad_range(lo, hi):
    with pytest.raises(ConfigError):
        init_population(1, 2, lo, hi, np.random.default_rng(0))


def test_init_population_rejects_small_population():
    with pytest.raises(ConfigError):
        init_population(2, 1, -1.0, 1.0, np.random.default_rng(0))


def test_init_population_is_deterministic():
    a = init_population(5, 4, -1.0, 1.0, np.random.default_rng(42))
    b = init_population(5, 4, -1.0, 1.0, np.random.default_rng(42))
    for pa, pb in zip(a, b):
        assert pa.position.tobytes() == pb.position.tobytes()


# =====================
# rank_population
# =====================

@pytest.mark.parametrize("pressures, ranks", [
    ([3.0, 1.0, 2.0], [3, 1, 2]),
    ([5.0, 5.0], [1, 2]),
    ([0.0, -1.0, 0.0, -1.0], [3, 1, 4, 2]),
])
def test_rank_population(pressures, ranks):
    parcels = [make_parcel([0.0], pressure=p) for p in pressures]
    assert [p.rank for p in rank_population(parcels)] == ranks


def test_rank_population_rejects_nan():
    parcels = [make_parcel([0.0], pressure=math.nan), make_parcel([0.0], pressure=1.0)]
    with pytest.raises(PressureError) as exc:
        rank_population(parcels)
    assert exc.value.parcel_index == 0


def test_rank_population_rejects_unevaluated():
    parcels = [make_parcel([0.0], pressure=1.0), make_parcel([0.0])]
    with pytest.raises(PressureError) as exc:
        rank_population(parcels)
    assert exc.value.parcel_index == 1


def test_rank_population_is_permutation(rng):
    pressures = rng.integers(0, 5, size=30).astype(float)
    ranked = rank_population([make_parcel([0.0], pressure=p) for p in pressures])
    ranks = [p.rank for p in ranked]
    assert sorted(ranks) == list(range(1, 31))
    by_rank = sorted(ranked, key=lambda p: p.rank)
    assert all(a.pressure <= b.pressure for a, b in zip(by_rank, by_rank[1:]))


# =====================
# update_velocity
# =====================

def test_update_velocity_hand_example():
    coeffs = WdoCoefficients(alpha=0.4, g=0.3, rt=2.0, c=0.2)
    parcel = make_parcel([0.5, 0.0], velocity=[0.1, 0.2], rank=2)
    best = BestTracker(best_position=np.array([0.8, 0.0]), best_pressure=0.0)

    velocity = update_velocity(parcel, coeffs, best, np.random.default_rng(0))

    # D = 2 時維度 0 的其他維度必為 1
    assert velocity[0] == pytest.approx(0.23, abs=1e-12)


def test_update_velocity_rank_one_at_origin_is_zero():
    coeffs = WdoCoefficients(alpha=0.4, g=0.3, rt=2.0, c=0.2)
    parcel = make_parcel(np.zeros(4), rank=1)
    best = BestTracker(best_position=np.full(4, 0.7), best_pressure=0.0)

    velocity = update_velocity(parcel, coeffs, best, np.random.default_rng(0))

    assert np.all(velocity == 0.0)


def test_update_velocity_is_clamped():
    coeffs = WdoCoefficients(alpha=0.0, g=0.0, rt=5.0, c=0.0)
    parcel = make_parcel([0.0], rank=2)
    best = BestTracker(best_position=np.array([0.36]), best_pressure=0.0)

    raw = raw_velocity(parcel, coeffs, best, None)
    assert raw[0] == pytest.approx(0.9)
    assert update_velocity(parcel, coeffs, best, np.random.default_rng(0))[0] == 0.3


def test_update_velocity_rejects_unranked():
    coeffs = WdoCoefficients(alpha=0.1, g=0.1, rt=0.1, c=0.1)
    best = BestTracker(best_position=np.zeros(2), best_pressure=0.0)
    with pytest.raises(ConfigError):
        update_velocity(make_parcel([0.1, 0.2]), coeffs, best, np.random.default_rng(0))


def test_rank_one_has_no_attraction_to_best(rng):
    D = 6
    coeffs = random_coeffs(rng, 1)[0]
    parcel = make_parcel(rng.uniform(-1, 1, D), velocity=rng.uniform(-0.3, 0.3, D), rank=1)
    best = BestTracker(best_position=rng.uniform(-1, 1, D), best_pressure=0.0)

    velocity = update_velocity(parcel, coeffs, best, np.random.default_rng(99))

    od = draw_other_dimensions(D, np.random.default_rng(99))
    u, x = parcel.velocity, parcel.position
    manual = (1 - coeffs.alpha) * u - coeffs.g * x + coeffs.c * u[od]
    np.testing.assert_allclose(velocity, np.clip(manual, -0.3, 0.3), rtol=1e-12, atol=1e-15)


def test_other_dimensions_never_pick_self(rng):
    for D in (2, 3, 10):
        od = draw_other_dimensions(D, rng)
        assert od.shape == (D,)
        assert np.all(od != np.arange(D))
        assert np.all((od >= 0) & (od < D))
    assert draw_other_dimensions(1, rng) is None


def test_velocity_matches_straight_line_oracle(rng):
    for _ in range(100):
        D = int(rng.integers(1, 8))
        coeffs = random_coeffs(rng, 1)[0]
        rank = int(rng.integers(1, 30))
        x = rng.uniform(-1, 1, D)
        u = rng.uniform(-0.3, 0.3, D)
        x_max = rng.uniform(-1, 1, D)
        parcel = make_parcel(x, velocity=u, rank=rank)
        best = BestTracker(best_position=x_max, best_pressure=0.0)
        od = draw_other_dimensions(D, rng)

        expected = []
        for d in range(D):
            value = (1 - coeffs.alpha) * u[d]
            value -= coeffs.g * x[d]
            value += abs(1 - 1 / rank) * coeffs.rt * (x_max[d] - x[d])
            if D > 1:
                value += coeffs.c * u[od[d]] / rank
            expected.append(value)

        raw = raw_velocity(parcel, coeffs, best, od)
        np.testing.assert_allclose(raw, expected, rtol=1e-12, atol=1e-15)
        clipped = np.clip(raw, -0.3, 0.3)
        assert np.all(np.abs(clipped) <= 0.3)


# =====================
# update_position
# =====================

@pytest.mark.parametrize("x, u, expected", [
    (0.5, 0.23, 0.73),
    (0.9, 0.3, 1.0),
    (-0.9, -0.3, -1.0),
    (0.4, 0.0, 0.4),
])
def test_update_position(x, u, expected):
    position = update_position(make_parcel([x]), np.array([u]))
    assert position[0] == pytest.approx(expected, abs=1e-15)


# =====================
# wdo_step
# =====================

def test_wdo_step_fixed_point_at_optimum():
    f = PressureFunction(fn=lambda x: float(x[0] ** 2), dimension=1)
    parcel = make_parcel([0.0], rank=1, pressure=0.0)
    best = BestTracker(best_position=np.array([0.0]), best_pressure=0.0)
    coeffs = [WdoCoefficients(alpha=0.5, g=0.5, rt=1.0, c=1.0)]

    parcels, best = wdo_step([parcel], coeffs, f, best, np.random.default_rng(0))

    assert parcels[0].position[0] == 0.0
    assert best.best_pressure == 0.0


def test_wdo_step_invariants(rng):
    f, parcels, best = sphere_population(D=8, N=12, seed=1)
    previous = best.best_pressure

    for _ in range(30):
        parcels, best = wdo_step(parcels, random_coeffs(rng, 12), f, best, rng)
        for p in parcels:
            assert np.all(np.abs(p.velocity) <= 0.3)
            assert np.all(np.abs(p.position) <= 1.0)
            assert math.isfinite(p.pressure)
        assert sorted(p.rank for p in parcels) == list(range(1, 13))
        assert best.best_pressure <= previous
        assert f(best.best_position) == best.best_pressure
        previous = best.best_pressure


def _trajectory(seed, executor=None):
    coeff_rng = np.random.default_rng(seed)
    step_rng = np.random.default_rng(seed + 1)
    f, parcels, best = sphere_population(D=5, N=6, seed=seed)
    positions = []
    for _ in range(10):
        parcels, best = wdo_step(parcels, random_coeffs(coeff_rng, 6), f, best, step_rng, executor)
        positions.append(np.stack([p.position for p in parcels]))
    return np.stack(positions), best


def test_wdo_step_is_deterministic():
    a, best_a = _trajectory(3)
    b, best_b = _trajectory(3)
    assert a.tobytes() == b.tobytes()
    assert best_a.best_pressure == best_b.best_pressure


def test_wdo_step_matches_per_parcel_update():
    """整個族群一起更新與逐一更新結果相同"""
    f, parcels, best = sphere_population(D=6, N=7, seed=5)
    coeffs = random_coeffs(np.random.default_rng(2), 7)

    moved, _ = wdo_step(parcels, coeffs, f, best, np.random.default_rng(13))

    streams = np.random.default_rng(13).spawn(7)
    for k, parcel in enumerate(parcels):
        velocity = update_velocity(parcel, coeffs[k], best, streams[k])
        np.testing.assert_allclose(moved[k].velocity, velocity, rtol=1e-12, atol=1e-15)
        np.testing.assert_allclose(moved[k].position, update_position(parcel, velocity), rtol=1e-12, atol=1e-15)


def test_wdo_step_rejects_unranked_population():
    f, parcels, best = sphere_population(D=2, N=3, seed=0)
    parcels[1] = make_parcel(parcels[1].position, pressure=parcels[1].pressure)
    with pytest.raises(ConfigError):
        wdo_step(parcels, random_coeffs(np.random.default_rng(1), 3), f, best, np.random.default_rng(0))


def test_wdo_step_parallel_matches_serial():
    serial, _ = _trajectory(4)
    with ThreadPoolExecutor(max_workers=4) as executor:
        parallel, _ = _trajectory(4, executor)
    assert serial.tobytes() == parallel.tobytes()


def test_wdo_step_reports_failing_parcel():
    _, parcels, best = sphere_population(D=2, N=4, seed=0)
    calls = []

    def flaky(x):
        calls.append(1)
        if len(calls) == 3:
            raise RuntimeError("boom")
        return float(np.sum(x ** 2))

    coeffs = random_coeffs(np.random.default_rng(1), 4)
    f = PressureFunction(fn=flaky, dimension=2)
    with pytest.raises(PressureError) as exc:
        wdo_step(parcels, coeffs, f, best, np.random.default_rng(8))
    assert exc.value.parcel_index == 2


def test_wdo_step_rejects_non_finite_pressure():
    _, parcels, best = sphere_population(D=2, N=3, seed=0)
    f = PressureFunction(fn=lambda x: math.inf, dimension=2)
    coeffs = random_coeffs(np.random.default_rng(1), 3)
    with pytest.raises(PressureError) as exc:
        wdo_step(parcels, coeffs, f, best, np.random.default_rng(0))
    assert exc.value.parcel_index == 0


def test_wdo_step_rejects_coefficient_count_mismatch():
    f, parcels, best = sphere_population(D=2, N=3, seed=0)
    with pytest.raises(ConfigError):
        wdo_step(parcels, random_coeffs(np.random.default_rng(1), 2), f, best, np.random.default_rng(0))


def test_coefficients_out_of_range_rejected():
    with pytest.raises(ConfigError):
        WdoCoefficients(alpha=1.5, g=0.0, rt=0.0, c=0.0)
    with pytest.raises(ConfigError):
        WdoCoefficients(alpha=0.0, g=0.0, rt=math.nan, c=0.0)
