import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from aoi_tools import bounds
from aoi_tools.bounds import (
    BoundInputs,
    RateSplit,
    bound_ratio_symmetric,
    continuous_time_single_source_lb,
    dpp_upper_bound,
    eta_star,
    eus_ewsaoi,
    f_star,
    finite_horizon_lb,
    finite_horizon_rate_split,
    perfect_fb_lb,
    randomized_ewsaoi,
    rate_split,
    relaxed_average_aoi,
    single_source_lb,
    theta,
    x_star,
    zero_fb_lb,
)
from aoi_tools.errors import NumericError, ParameterError

TABLE_RHOS = [0.1, 1 / 6, 0.2, 0.25, 0.3, 0.5, 0.8, 1.0]
TABLE_ZERO_FEEDBACK = [18.10, 11.06, 9.30, 7.54, 6.37, 4.02, 2.70, 2.26]
TABLE_PERFECT_FEEDBACK = [16.50, 10.10, 8.50, 6.90, 5.83, 3.70, 2.50, 2.10]

def table_inputs(rho, **kwargs):
    return BoundInputs.from_weights((1, 4, 9, 36), (0.1,) * 4, rho, **kwargs)

def symmetric_inputs(N, epsilon, rho, **kwargs):
    return BoundInputs((1 / N,) * N, (epsilon,) * N, rho, **kwargs)

def test_f_star_values():
    assert f_star(10, 9, 0) == pytest.approx(1.0)
    assert f_star(10, 10, 0) == pytest.approx(10 / 22 + 0.5)
    assert f_star(10, 0, 0) == pytest.approx(5.5)
    assert f_star(100, 10, 0.1) == pytest.approx(55 / 10.1 + 0.5)

@pytest.mark.parametrize("arguments", [(0, 1, 0.1), (10, -1, 0.1), (10, 1, 1.0)])
def test_f_star_domain(arguments):
    with pytest.raises(ParameterError):
        f_star(*arguments)

def test_x_star_values():
    np.testing.assert_allclose(x_star(12, 2, 0), [4, 4, 4])
    np.testing.assert_allclose(x_star(10, 1, 0.5), [5, 5])
    intervals = x_star(100, 10, 0.1)
    assert intervals[0] == pytest.approx(100 / 10.1)
    assert intervals[-1] == pytest.approx(100 / 10.1)
    np.testing.assert_allclose(intervals[1:-1], 90 / 10.1)
    assert intervals.sum() == pytest.approx(100)

def test_x_star_without_transmission_leaves_the_horizon():
    with pytest.raises(ParameterError):
        x_star(10, 0, 0)

@pytest.mark.parametrize("T, U, epsilon", [(100, 10, 0.1), (12, 2, 0.0), (50, 4, 0.4), (1000, 30, 0.7)])
def test_x_star_reaches_f_star(T, U, epsilon):
    assert relaxed_average_aoi(x_star(T, U, epsilon), epsilon, T) == pytest.approx(f_star(T, U, epsilon), rel=1e-12)

def test_x_star_is_a_minimum():
    T, U, epsilon = 100, 10, 0.3
    best = relaxed_average_aoi(x_star(T, U, epsilon), epsilon, T)
    rng = np.random.default_rng(3)
    for _ in range(50):
        perturbation = rng.normal(scale=0.5, size=U + 1)
        perturbation -= perturbation.mean()
        assert relaxed_average_aoi(x_star(T, U, epsilon) + perturbation, epsilon, T) >= best

def test_single_source_lb():
    assert single_source_lb(1, 0) == 1.0
    assert single_source_lb(0.5, 0.1) == pytest.approx(1.1 / 0.9 + 0.5)
    for epsilon in (0.0, 0.2, 0.75):
        assert single_source_lb(1, epsilon) - continuous_time_single_source_lb(epsilon) == pytest.approx(0.5)

def test_rate_split_table_config():
    split = rate_split(table_inputs(0.1))
    np.testing.assert_allclose(split.rates, [1 / 120, 1 / 60, 1 / 40, 1 / 20], rtol=1e-12)
    assert split.total == pytest.approx(0.1, abs=1e-12)

def test_rate_split_symmetric_and_single():
    np.testing.assert_allclose(rate_split(symmetric_inputs(5, 0.3, 0.5)).rates, 0.1)
    assert rate_split(BoundInputs((1.0,), (0.4,), 0.7)).rates == pytest.approx((0.7,))

@pytest.mark.parametrize("rho, expected", list(zip(TABLE_RHOS, TABLE_ZERO_FEEDBACK)))
def test_zero_fb_lb_table(rho, expected):
    assert zero_fb_lb(table_inputs(rho)) == pytest.approx(expected, abs=0.005)

@pytest.mark.parametrize("rho, expected", list(zip(TABLE_RHOS, TABLE_PERFECT_FEEDBACK)))
def test_perfect_fb_lb_table(rho, expected):
    assert perfect_fb_lb(table_inputs(rho)) == pytest.approx(expected, abs=0.005)

def test_bounds_coincide_on_error_free_channels():
    inputs = BoundInputs.from_weights((1, 2, 3), (0.0, 0.0, 0.0), 0.4)
    assert perfect_fb_lb(inputs) == pytest.approx(zero_fb_lb(inputs), rel=1e-14)

@pytest.mark.parametrize("N", [2, 4, 8])
@pytest.mark.parametrize("epsilon", [0.1, 0.3])
@pytest.mark.parametrize("rho", [0.5, 1.0])
def test_bound_ratio_symmetric_grid(N, epsilon, rho):
    inputs = symmetric_inputs(N, epsilon, rho)
    assert zero_fb_lb(inputs) / perfect_fb_lb(inputs) == pytest.approx(bound_ratio_symmetric(N, epsilon, rho), abs=1e-9)

@given(
    N=st.integers(min_value=1, max_value=12),
    epsilon=st.floats(min_value=0.0, max_value=0.95),
    rho=st.floats(min_value=0.01, max_value=1.0),
)
def test_bound_ratio_symmetric_property(N, epsilon, rho):
    inputs = symmetric_inputs(N, epsilon, rho)
    assert zero_fb_lb(inputs) / perfect_fb_lb(inputs) == pytest.approx(bound_ratio_symmetric(N, epsilon, rho), rel=1e-9)

def test_finite_horizon_single_source():
    inputs = BoundInputs((1.0,), (0.0,), 1.0, T=10)
    assert finite_horizon_lb(inputs) == pytest.approx(10 / 22 + 0.5)
    assert finite_horizon_lb(inputs) == pytest.approx(f_star(10, 10, 0))

def test_finite_horizon_symmetric_split():
    T, rho, epsilon = 1000, 0.5, 0.2
    inputs = symmetric_inputs(2, epsilon, rho, T=T)
    split, residual = finite_horizon_rate_split(inputs)
    np.testing.assert_allclose(split.rates, [0.25, 0.25], rtol=1e-9)
    assert abs(residual) <= 1e-10
    expected = (T / 2) * (1 + epsilon) / (2 + (T * 0.25 - 1) * (1 - epsilon)) + 0.5
    assert finite_horizon_lb(inputs) == pytest.approx(expected, rel=1e-9)

@pytest.mark.parametrize("rho", TABLE_RHOS)
def test_finite_horizon_residual(rho):
    _, residual = finite_horizon_rate_split(table_inputs(rho, T=10 ** 4))
    assert abs(residual) <= 1e-10

def test_finite_horizon_grows_towards_zero_fb_lb():
    lValues = [finite_horizon_lb(table_inputs(0.5, T=T)) for T in (10, 100, 1000, 10 ** 4, 10 ** 5)]
    assert all(earlier <= later for earlier, later in zip(lValues, lValues[1:]))
    assert lValues[-1] <= zero_fb_lb(table_inputs(0.5))

@pytest.mark.parametrize("rho", [0.5, 1.0])
def test_finite_horizon_converges(rho):
    assert abs(finite_horizon_lb(table_inputs(rho, T=10 ** 8)) - zero_fb_lb(table_inputs(rho))) < 1e-6

def test_finite_horizon_converges_relative_at_low_rate():
    limit = zero_fb_lb(table_inputs(0.1))
    assert abs(finite_horizon_lb(table_inputs(0.1, T=10 ** 8)) - limit) < 1e-6 * limit

def test_finite_horizon_needs_horizon():
    with pytest.raises(ParameterError):
        finite_horizon_lb(table_inputs(0.5))

def test_finite_horizon_reports_solver_failure(monkeypatch):
    def failing_bisect(*args, **kwargs):
        raise RuntimeError("no convergence")

    monkeypatch.setattr(bounds, "bisect", failing_bisect)
    with pytest.raises(NumericError):
        finite_horizon_rate_split(table_inputs(0.5, T=1000))

def test_eta_star():
    np.testing.assert_allclose(eta_star(symmetric_inputs(4, 0.2, 0.8)).rates, 0.2)
    assert eta_star(BoundInputs((1.0,), (0.3,), 0.6)).rates == pytest.approx((0.6,))
    assert eta_star(table_inputs(0.3)).total == pytest.approx(0.3)

def test_theta():
    assert theta(0.5, 0.2, 0.25) == pytest.approx(2.0)
    with pytest.raises(ParameterError):
        theta(0.5, 0.2, 0.0)

def test_randomized_ewsaoi():
    inputs = BoundInputs((0.5, 0.5), (0.2, 0.1), 0.6, lambdas=(0.5, 0.8))
    eta = RateSplit((0.3, 0.3))
    expected = 0.5 * (1 / (0.8 * 0.3) + 1) + 0.5 * (1 / (0.9 * 0.3) + 0.25)
    assert randomized_ewsaoi(inputs, eta) == pytest.approx(expected)

    gaw = BoundInputs((0.5, 0.5), (0.2, 0.1), 0.6, lambdas=(1.0, 1.0))
    assert randomized_ewsaoi(gaw, eta) == pytest.approx(0.5 / (0.8 * 0.3) + 0.5 / (0.9 * 0.3))

    with pytest.raises(ParameterError):
        randomized_ewsaoi(BoundInputs((0.5, 0.5), (0.2, 0.1), 0.6), eta)

def test_dpp_upper_bound():
    inputs = BoundInputs((0.5, 0.5), (0.2, 0.1), 0.6, lambdas=(0.5, 0.8), V=2.0)
    expected = 2.0 * (0.36 + 1) / 2 + randomized_ewsaoi(inputs, eta_star(inputs))
    assert dpp_upper_bound(inputs) == pytest.approx(expected)
    with pytest.raises(ParameterError):
        dpp_upper_bound(BoundInputs((0.5, 0.5), (0.2, 0.1), 0.6, lambdas=(0.5, 0.8)))

@pytest.mark.parametrize("rho", TABLE_RHOS)
def test_eus_ewsaoi_at_rate_split_is_zero_fb_lb(rho):
    inputs = table_inputs(rho)
    assert eus_ewsaoi(inputs, rate_split(inputs)) == pytest.approx(zero_fb_lb(inputs), rel=1e-12)

def test_bound_inputs_validation():
    with pytest.raises(ParameterError):
        BoundInputs((0.5, 0.6), (0.1, 0.1), 0.5)
    with pytest.raises(ParameterError):
        BoundInputs((0.5, 0.5), (0.1,), 0.5)
    with pytest.raises(ParameterError):
        BoundInputs((1.0,), (0.1,), 1.5)
    with pytest.raises(ParameterError):
        BoundInputs((1.0,), (0.1,), 0.5, T=0)
    assert math.fsum(table_inputs(0.5).alphas) == pytest.approx(1.0)
