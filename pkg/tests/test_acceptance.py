""" Full scale runs, 10^6 slots with 10 replications. Enabled with --runslow """
import dataclasses

import pytest

from aoi_tools.bounds import BoundInputs, zero_fb_lb
from aoi_tools.cli.presets import apply_sweep_value, gaw_table_config, grouped_config, lGawTableRhos
from aoi_tools.model import Mechanism
from aoi_tools.sim import ordering_check, run_experiment
from aoi_tools.tools import POLICY_DPP, POLICY_EUS, POLICY_RANDOMIZED

pytestmark = pytest.mark.slow

HORIZON = 10 ** 6
REPLICATIONS = 10
WORKERS = 4

def bernoulli_config(**kwargs):
    return grouped_config(size=4, horizon=HORIZON, **kwargs)

@pytest.mark.parametrize("rho", [0.1, 1 / 6, 0.2, 0.25, 0.5])
def test_eus_reaches_the_table_bound(rho):
    config = gaw_table_config(rho, HORIZON)
    report = run_experiment(config, POLICY_EUS, REPLICATIONS, workers=WORKERS)
    assert report.ewsaoi == pytest.approx(zero_fb_lb(BoundInputs.from_config(config)), rel=0.01)
    assert report.rate == pytest.approx(rho, abs=1e-4)

@pytest.mark.parametrize("rho", lGawTableRhos)
def test_dpp_close_to_the_table_bound(rho):
    config = gaw_table_config(rho, HORIZON)
    report = run_experiment(config, POLICY_DPP, REPLICATIONS, workers=WORKERS)
    assert report.ewsaoi == pytest.approx(report.boundLower, rel=0.03)
    assert report.qOverT < 0.01
    assert report.rate <= rho + 0.005

@pytest.mark.parametrize("mechanism", [Mechanism.ACKS, Mechanism.ACKS_NACKS])
def test_bernoulli_policies_meet_their_guarantees(mechanism):
    config = dataclasses.replace(bernoulli_config(), mechanism=mechanism)
    dpp = run_experiment(config, POLICY_DPP, REPLICATIONS, workers=WORKERS)
    assert dpp.ewsaoi <= dpp.boundUpper
    assert dpp.qOverT < 0.01
    assert dpp.rate <= config.rho + 0.005
    randomized = run_experiment(config, POLICY_RANDOMIZED, REPLICATIONS, workers=WORKERS)
    assert randomized.ewsaoi == pytest.approx(randomized.boundUpper, rel=0.01)
    assert randomized.hhatEwsaoi == pytest.approx(randomized.ewsaoi, rel=0.01)

@pytest.mark.parametrize("parameter, lValues", [
    ("delay", [0, 2, 4, 6, 8, 10]),
    ("sigma", [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]),
    ("epsilon", [0.1, 0.2, 0.3, 0.5]),
    ("rho", [0.2, 0.4, 0.6, 0.8, 1.0]),
    ("lambda", [0.1, 0.3, 0.5, 0.7, 0.9]),
])
def test_sweep_trends(parameter, lValues):
    config = bernoulli_config()
    lReports = [run_experiment(apply_sweep_value(config, parameter, value), POLICY_DPP, REPLICATIONS, workers=WORKERS) for value in lValues]
    assert ordering_check(lReports, parameter).monotone

@pytest.mark.parametrize("delay", [0, 5, 10])
def test_nacks_do_not_hurt(delay):
    config = bernoulli_config(delay=delay)
    acks = run_experiment(dataclasses.replace(config, mechanism=Mechanism.ACKS), POLICY_DPP, REPLICATIONS, workers=WORKERS)
    acknacks = run_experiment(dataclasses.replace(config, mechanism=Mechanism.ACKS_NACKS), POLICY_DPP, REPLICATIONS, workers=WORKERS)
    assert acknacks.ewsaoi <= acks.ewsaoi + 2 * (acks.ewsaoiStderr + acknacks.ewsaoiStderr)
