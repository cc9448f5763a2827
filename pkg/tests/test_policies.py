from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from aoi_tools.bounds import BoundInputs, RateSplit, eta_star, theta
from aoi_tools.errors import ParameterError, ValidationError
from aoi_tools.eus import CyclicSchedule
from aoi_tools.model import NetworkConfig, SourceParams, normalize_sources
from aoi_tools.policies import (
    IDLE,
    Decision,
    DppPolicy,
    DppState,
    EusPolicy,
    RandomizedPolicy,
    RoundRobinPolicy,
    dpp_decide,
    eus_decide,
    randomized_decide,
    round_robin_decide,
    virtual_queue_update,
)
from aoi_tools.streams import ReplicationStreams, SlotStream
from aoi_tools.tools import (
    POLICY_DPP,
    POLICY_EUS,
    POLICY_MAX_WEIGHT,
    POLICY_RANDOMIZED,
    POLICY_ROUND_ROBIN,
    is_policy_this,
    is_policy_this_list,
    make_policy,
)

def table_config(rho, horizon=1000):
    lSources = [SourceParams(n, 1.0, 0.1, alpha=weight) for n, weight in enumerate((1, 4, 9, 36), start=1)]
    return NetworkConfig(normalize_sources(lSources)[0], rho, horizon=horizon)

def test_virtual_queue_update():
    assert virtual_queue_update(0.0, 0.3, 0) == 0.0
    assert virtual_queue_update(0.0, 0.3, 1) == pytest.approx(0.7)
    assert virtual_queue_update(2.0, 0.3, 0) == pytest.approx(1.7)

def test_dpp_decide_threshold_and_ties():
    lWeights = [1.0, 2.0, 1.0]
    assert dpp_decide(DppState(V=1.0, Q=0.0), lWeights, [0, 0, 0], [3.0, 2.0, 1.0]) == Decision(2)
    # 1*(5-0) == 2*(2.5-0), the lowest index wins
    assert dpp_decide(DppState(V=1.0, Q=0.0), lWeights, [0, 0, 0], [5.0, 2.5, 1.0]) == Decision(1)
    assert dpp_decide(DppState(V=1.0, Q=4.0), lWeights, [0, 0, 0], [3.0, 2.0, 1.0]) == Decision(2)
    assert dpp_decide(DppState(V=1.0, Q=4.1), lWeights, [0, 0, 0], [3.0, 2.0, 1.0]) is IDLE

def test_max_weight_ignores_the_queue():
    assert dpp_decide(DppState(V=0.0, Q=1e9), [1.0, 1.0], [0, 3], [2.0, 6.0]) == Decision(2)

@given(
    lIndices=st.lists(st.tuples(st.floats(0.01, 10.0), st.integers(0, 20), st.floats(1.0, 50.0)), min_size=1, max_size=6),
    Q=st.floats(0.0, 100.0),
    scale=st.sampled_from([0.25, 0.5, 2.0, 4.0]),
)
def test_dpp_decision_is_scale_invariant(lIndices, Q, scale):
    lWeights = [weight for weight, _, _ in lIndices]
    lW = [w for _, w, _ in lIndices]
    lHhat = [w + 1 + excess for _, w, excess in lIndices]
    decision = dpp_decide(DppState(V=1.0, Q=Q), lWeights, lW, lHhat)
    scaled = dpp_decide(DppState(V=1.0, Q=Q * scale), [weight * scale for weight in lWeights], lW, lHhat)
    assert decision == scaled

def test_dpp_policy_weights_and_queue():
    inputs = BoundInputs((0.5, 0.5), (0.2, 0.1), 0.6, lambdas=(0.5, 0.8))
    policy = DppPolicy(inputs, V=2.0)
    etas = eta_star(inputs).rates
    assert policy.lWeights == pytest.approx([0.5 / etas[0], 0.5 / etas[1]])
    assert policy.state.thetas == pytest.approx([theta(0.5, 0.2, etas[0]), theta(0.5, 0.1, etas[1])])
    assert policy.lWeights == pytest.approx([(1 - epsilon) * (0.5 + thetaN) for epsilon, thetaN in zip((0.2, 0.1), policy.state.thetas)])
    policy.update(1)
    assert policy.state.Q == pytest.approx(0.4)
    with pytest.raises(ParameterError):
        DppPolicy(inputs, V=-1.0)

def test_dpp_rate_follows_the_budget():
    # GAW, zero feedback: hhat and w evolve deterministically from the decisions
    inputs = BoundInputs.from_weights((1, 4, 9, 36), (0.1,) * 4, 0.5)
    policy = DppPolicy(inputs, V=1.0)
    lHhat, transmissions, horizon = [1.0] * 4, 0, 20000
    for t in range(horizon):
        decision = policy.decide(t, [0] * 4, lHhat)
        for n in range(4):
            a = 1 if decision.scheduled == n + 1 else 0
            lHhat[n] = 0.1 * (lHhat[n] + 1) + 0.9 if a else lHhat[n] + 1
        transmissions += decision.total_actions
        policy.update(decision.total_actions)
    assert transmissions / horizon <= 0.5 + 0.005
    assert policy.state.Q / horizon < 0.01

def test_randomized_decide():
    lCumulative = [0.1, 0.3]
    assert randomized_decide(lCumulative, 0.05) == Decision(1)
    assert randomized_decide(lCumulative, 0.1) == Decision(2)
    assert randomized_decide(lCumulative, 0.35) is IDLE

def test_randomized_policy_frequencies():
    eta = RateSplit((0.1, 0.25))
    policy = RandomizedPolicy(eta, SlotStream(3, 0, "policy"))
    horizon = 200000
    lCounts = [0, 0, 0]
    for t in range(horizon):
        scheduled = policy.decide(t).scheduled
        lCounts[0 if scheduled is None else scheduled] += 1
    for source, probability in ((1, 0.1), (2, 0.25)):
        standardError = np.sqrt(probability * (1 - probability) / horizon)
        assert abs(lCounts[source] / horizon - probability) < 4 * standardError
    with pytest.raises(ParameterError):
        RandomizedPolicy(RateSplit((0.6, 0.6)), SlotStream(3, 0, "policy"))

def test_eus_policy():
    policy = EusPolicy(CyclicSchedule((0, 1), (2, 4)))
    assert [policy.decide(t).scheduled for t in range(8)] == [1, 2, 1, None, 1, 2, 1, None]
    assert eus_decide(CyclicSchedule((3,), (4,)), 1) is IDLE
    with pytest.raises(ValidationError):
        EusPolicy(CyclicSchedule((0, 0), (4, 6)))

def test_round_robin():
    assert [round_robin_decide(2, Fraction(1, 2), t).scheduled for t in range(8)] == [None, 1, None, 2, None, 1, None, 2]
    policy = RoundRobinPolicy(3, 0.3)
    lDecisions = [policy.decide(t) for t in range(3000)]
    assert sum(decision.total_actions for decision in lDecisions) == 900
    lServed = [decision.scheduled for decision in lDecisions if decision.scheduled is not None]
    assert [lServed.count(source) for source in (1, 2, 3)] == [300, 300, 300]
    with pytest.raises(ParameterError):
        RoundRobinPolicy(0, 0.3)

def test_make_policy_and_kind_checks():
    config = table_config(0.5)
    streams = ReplicationStreams(0, config.size)
    assert is_policy_this(make_policy(POLICY_DPP, config), POLICY_DPP)
    maxWeight = make_policy(POLICY_MAX_WEIGHT, config)
    assert maxWeight.name == POLICY_MAX_WEIGHT and maxWeight.state.V == 0
    assert is_policy_this(maxWeight, POLICY_MAX_WEIGHT)
    assert not is_policy_this(maxWeight, POLICY_DPP)
    assert is_policy_this(make_policy(POLICY_RANDOMIZED, config, streams), POLICY_RANDOMIZED)
    assert is_policy_this(make_policy(POLICY_EUS, config), POLICY_EUS)
    assert is_policy_this_list(make_policy(POLICY_ROUND_ROBIN, config), POLICY_EUS, POLICY_ROUND_ROBIN)
    assert not is_policy_this(make_policy(POLICY_ROUND_ROBIN, config), "unknown")

def test_make_policy_errors():
    with pytest.raises(ParameterError):
        make_policy("lottery", table_config(0.5))
    with pytest.raises(ParameterError):
        make_policy(POLICY_RANDOMIZED, table_config(0.5))
    with pytest.raises(ValidationError):
        make_policy(POLICY_EUS, table_config(0.3))
