import csv
import math

import pytest

from aoi_tools.bounds import BoundInputs, eta_star, randomized_ewsaoi, single_source_lb, zero_fb_lb
from aoi_tools.errors import ParameterError
from aoi_tools.model import INFINITE_DELAY, Mechanism, NetworkConfig, SourceParams, normalize_sources
from aoi_tools.sim import (
    DECREASING,
    INCREASING,
    SimReport,
    aggregate_reports,
    ordering_check,
    run_experiment,
    run_replication,
)
from aoi_tools.tools import POLICY_DPP, POLICY_EUS, POLICY_MAX_WEIGHT, POLICY_RANDOMIZED, POLICY_ROUND_ROBIN

def network(lSources, rho, horizon, **kwargs):
    return NetworkConfig(normalize_sources(lSources)[0], rho, horizon=horizon, **kwargs)

def table_config(rho, horizon):
    return network([SourceParams(n, 1.0, 0.1, alpha=weight) for n, weight in enumerate((1, 4, 9, 36), start=1)], rho, horizon)

def bernoulli_config(horizon, sigma=0.3, delay=3, mechanism=Mechanism.ACKS_NACKS):
    lSources = [
        SourceParams(1, 0.5, 0.2, sigma=sigma, delay=delay, alpha=1.0),
        SourceParams(2, 0.8, 0.1, sigma=sigma, delay=delay, alpha=3.0),
    ]
    return network(lSources, 0.6, horizon, mechanism=mechanism)

def report_with(ewsaoi, stderr=0.0):
    return SimReport("dpp", "ACKS_NACKS", 100, 0, ewsaoi, 0.5, 0.0, (ewsaoi,), (0.5,), ewsaoi, replications=10, ewsaoiStderr=stderr)

def test_error_free_full_rate_source_has_unit_age():
    config = network([SourceParams(1, 1.0, 0.0)], 1.0, 10 ** 4)
    report = run_replication(config, POLICY_EUS)
    assert report.ewsaoi == 1.0
    assert report.rate == 1.0

def test_single_source_schedule_matches_closed_form():
    config = network([SourceParams(1, 1.0, 0.1)], 0.5, 2 * 10 ** 5)
    report = run_replication(config, POLICY_EUS)
    assert report.ewsaoi == pytest.approx(single_source_lb(0.5, 0.1), rel=0.02)
    assert report.rate == 0.5

def test_replications_are_deterministic():
    config = bernoulli_config(5000)
    assert run_replication(config, POLICY_DPP, seed=4) == run_replication(config, POLICY_DPP, seed=4)
    assert run_replication(config, POLICY_DPP, seed=4) != run_replication(config, POLICY_DPP, seed=5)

def test_report_invariants():
    config = bernoulli_config(20000, mechanism=Mechanism.ACKS)
    for policy in (POLICY_DPP, POLICY_MAX_WEIGHT, POLICY_RANDOMIZED, POLICY_ROUND_ROBIN):
        report = run_replication(config, policy)
        assert report.ewsaoi >= 1
        assert 0 <= report.rate <= 1
        assert report.qOverT >= 0
        assert report.rate == pytest.approx(sum(report.perSourceRate))
        assert report.ewsaoi == pytest.approx(sum(alpha * aoi for alpha, aoi in zip(config.alphas, report.perSourceAoi)))

def test_invalid_config_is_rejected_before_running():
    with pytest.raises(ParameterError):
        run_replication("not a config")
    with pytest.raises(ParameterError):
        run_replication(bernoulli_config(100), seed=-1)

def test_eus_reaches_the_zero_feedback_bound():
    config = table_config(0.5, 2 * 10 ** 5)
    report = run_experiment(config, POLICY_EUS, replications=2)
    assert report.ewsaoi == pytest.approx(zero_fb_lb(BoundInputs.from_config(config)), rel=0.02)
    assert report.boundUpper == pytest.approx(report.boundLower)
    assert report.rate == pytest.approx(0.5, abs=1e-4)

def test_dpp_between_its_bounds_and_within_budget():
    config = table_config(0.5, 2 * 10 ** 5)
    report = run_replication(config, POLICY_DPP)
    assert report.ewsaoi >= report.boundLower * 0.98
    assert report.ewsaoi <= report.boundUpper
    assert report.ewsaoi <= report.boundLower * 1.05
    assert report.rate <= 0.5 + 0.005
    assert report.qOverT < 0.01

def test_dpp_guarantee_with_delayed_feedback():
    for mechanism in (Mechanism.ACKS, Mechanism.ACKS_NACKS):
        report = run_replication(bernoulli_config(10 ** 5, mechanism=mechanism), POLICY_DPP)
        assert report.ewsaoi <= report.boundUpper
        assert report.qOverT < 0.01

def test_randomized_policy_matches_closed_form():
    config = bernoulli_config(2 * 10 ** 5, sigma=1.0)
    report = run_replication(config, POLICY_RANDOMIZED)
    inputs = BoundInputs.from_config(config)
    assert report.boundUpper == pytest.approx(randomized_ewsaoi(inputs, eta_star(inputs)))
    assert report.ewsaoi == pytest.approx(report.boundUpper, rel=0.03)

@pytest.mark.parametrize("sigma, delay, mechanism", [
    (0.3, 3, Mechanism.ACKS),
    (0.3, 3, Mechanism.ACKS_NACKS),
    (1.0, 0, Mechanism.ACKS_NACKS),
    (0.0, INFINITE_DELAY, Mechanism.ACKS_NACKS),
])
def test_estimate_tracks_true_age(sigma, delay, mechanism):
    report = run_replication(bernoulli_config(2 * 10 ** 5, sigma, delay, mechanism), POLICY_RANDOMIZED)
    assert report.hhatEwsaoi == pytest.approx(report.ewsaoi, rel=0.02)

def test_fast_and_repropagating_estimators_give_the_same_run():
    config = bernoulli_config(5000, sigma=0.2, delay=6, mechanism=Mechanism.ACKS)
    fast = run_replication(config, POLICY_DPP, fast=True)
    slow = run_replication(config, POLICY_DPP, fast=False)
    assert fast.ewsaoi == slow.ewsaoi
    assert fast.hhatEwsaoi == pytest.approx(slow.hhatEwsaoi, rel=1e-9)

def test_trace(tmp_path):
    path = tmp_path / "trace.csv"
    run_replication(bernoulli_config(50), POLICY_DPP, tracePath=path)
    with open(path, newline="") as csvFile:
        lRows = list(csv.reader(csvFile))
    assert lRows[0] == ["slot", "source", "a", "v", "w", "hhat", "h"]
    assert len(lRows) == 1 + 50 * 2
    assert lRows[1] == ["0", "1", lRows[1][2], lRows[1][3], "0", "1.0", "1"]
    assert sum(int(row[2]) for row in lRows[1:3]) <= 1

def test_aggregate_reports():
    first, second = report_with(4.0), report_with(6.0)
    assert aggregate_reports([first]) is first
    aggregated = aggregate_reports([first, second])
    assert aggregated.ewsaoi == 5.0
    assert aggregated.ewsaoiStderr == pytest.approx(1.0)
    assert aggregated.replications == 2
    with pytest.raises(ParameterError):
        aggregate_reports([])

def test_run_experiment_seeds_and_workers():
    config = bernoulli_config(3000)
    single = run_experiment(config, POLICY_DPP, replications=1)
    assert single == run_replication(config, POLICY_DPP)

    aggregated = run_experiment(config, POLICY_DPP, replications=3)
    assert [report.seed for report in aggregated.lReplications] == [config.seed, config.seed + 1, config.seed + 2]
    assert aggregated == run_experiment(config, POLICY_DPP, replications=3, workers=2)

def test_ordering_check():
    decreasing = [report_with(value, 0.1) for value in (18.0, 9.0, 4.0, 2.3)]
    verdict = ordering_check(decreasing, "rho")
    assert verdict.direction == DECREASING
    assert verdict.monotone and verdict.strict

    constant = [report_with(5.0, 0.1)] * 3
    verdict = ordering_check(constant, "delay")
    assert verdict.monotone and not verdict.strict

    # A dip inside two pooled standard errors is tolerated, a larger one is not
    assert ordering_check([report_with(5.0, 0.1), report_with(4.8, 0.1)], direction=INCREASING).monotone
    verdict = ordering_check([report_with(5.0, 0.1), report_with(4.0, 0.1), report_with(6.0, 0.1)], "sigma")
    assert not verdict.monotone
    assert verdict.lViolations == ((0, 1),)

    with pytest.raises(ParameterError):
        ordering_check(decreasing, "size")

def test_eus_decreases_with_the_budget():
    lReports = [run_replication(table_config(rho, 5 * 10 ** 4), POLICY_EUS) for rho in (0.1, 0.2, 0.5)]
    verdict = ordering_check(lReports, "rho")
    assert verdict.strict
    assert math.isclose(lReports[0].boundLower, 18.1, abs_tol=0.005)
