# -*- coding: utf-8 -*-
"""
梯度下降基準測試
"""

import math

import numpy as np
import pytest

from awdo.exceptions import NumericalError
from awdo.models.network import NetworkShape
from awdo.models.run import GdConfig, GdOptions
from awdo.services.baseline_gd import gd_train, steepest_descent
from awdo.services.mnist import synthetic_dataset
from awdo.services.neural_net import INIT_RANGE, cost, init_params


def test_quadratic_converges_in_one_step():
    x, records = steepest_descent(
        np.array([3.0, -4.0]),
        lambda x: 0.5 * float(np.dot(x, x)),
        lambda x: x,
        GdOptions(max_iterations=3),
    )
    np.testing.assert_array_equal(x, [0.0, 0.0])
    assert records[0] == (0, 12.5, 0.0, False)
    assert records[1] == (1, 0.0, 1.0, False)
    assert len(records) == 4


def test_backtracking_shrinks_step():
    # f = 2 x²，初始步長 1 會跳過最小值
    x, records = steepest_descent(
        np.array([1.0]),
        lambda x: 2.0 * float(x[0] ** 2),
        lambda x: 4.0 * x,
        GdOptions(max_iterations=1),
    )
    assert records[1][2] == 0.25
    assert x[0] == 0.0


def test_halving_cap_accepts_smallest_step():
    options = GdOptions(max_iterations=2, max_halvings=3)
    _, records = steepest_descent(
        np.array([1.0]),
        lambda x: 1.0,
        lambda x: np.array([1.0]),
        options,
    )
    assert records[1][2] == 0.125
    assert records[1][3] is True
    assert records[2][3] is True


def test_non_finite_start_cost_raises():
    with pytest.raises(NumericalError):
        steepest_descent(np.zeros(2), lambda x: math.nan, lambda x: x, GdOptions())


def test_gd_train_history(small_shape, small_dataset, rng):
    params0 = init_params(small_shape, *INIT_RANGE, rng)
    config = GdConfig(seed=0, max_iterations=30, reg_lambda=0.1)
    params, history = gd_train(params0, small_dataset, config)

    assert len(history) == 31
    assert [r.iteration for r in history] == list(range(31))
    assert history[0].cost == cost(params0, small_dataset, 0.1)
    assert history[-1].cost == pytest.approx(cost(params, small_dataset, 0.1), rel=1e-12)
    costs = [r.cost for r in history]
    assert all(b <= a for a, b in zip(costs, costs[1:]))
    assert all(0.0 <= r.train_accuracy <= 1.0 for r in history)


def test_gd_config_accepts_lambda_alias():
    assert GdConfig.model_validate({"seed": 1, "lambda": 0.5}).reg_lambda == 0.5
    assert GdConfig(seed=1, reg_lambda=0.2).reg_lambda == 0.2


def test_gd_fits_separable_synthetic_data():
    shape = NetworkShape()
    data = synthetic_dataset(50, shape, 1.0, np.random.default_rng(0))
    params0 = init_params(shape, *INIT_RANGE, np.random.default_rng(1))
    config = GdConfig(seed=0, max_iterations=500, initial_step=4.0, reg_lambda=0.01)

    _, history = gd_train(params0, data, config)

    assert history[-1].train_accuracy == 1.0
