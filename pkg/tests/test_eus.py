import csv
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aoi_tools.bounds import BoundInputs, rate_split
from aoi_tools.errors import ParameterError, ValidationError
from aoi_tools.eus import (
    CyclicSchedule,
    admissible_periods,
    assign_leaves,
    build_splitting_tree,
    candidate_tree_bound,
    check_eus_condition,
    collision_scan,
    design_eus,
    generate_schedule,
    is_divisible_rates,
    offsets_from_tree,
    periods_from_rates,
    prime_factors,
    schedule_from_periods,
    write_schedule_csv,
)

EXAMPLE_PERIODS = (4, 6, 20, 20, 20, 12, 12)
EXAMPLE_OFFSETS = (0, 1, 2, 6, 10, 3, 9)

def table_rates(rho):
    return rate_split(BoundInputs.from_weights((1, 4, 9, 36), (0.1,) * 4, rho)).rates

def test_prime_factors():
    assert prime_factors(1) == []
    assert prime_factors(60) == [2, 2, 3, 5]
    assert prime_factors(97) == [97]

def test_check_eus_condition():
    assert check_eus_condition((0, 1), (4, 6))
    assert not check_eus_condition((0, 0), (4, 6))
    assert check_eus_condition(EXAMPLE_OFFSETS, EXAMPLE_PERIODS)
    with pytest.raises(ParameterError):
        check_eus_condition((0, 1), (4, 6.5))

def test_condition_agrees_with_collision_scan():
    rng = np.random.default_rng(17)
    for _ in range(300):
        size = int(rng.integers(2, 4))
        periods = tuple(int(period) for period in rng.integers(1, 13, size))
        offsets = tuple(int(rng.integers(0, period)) for period in periods)
        assert check_eus_condition(offsets, periods) == (not collision_scan(CyclicSchedule(offsets, periods)))

def test_two_halves():
    tree = build_splitting_tree([Fraction(1, 2), Fraction(1, 2)])
    assert tree.root.prime == 2
    assert [leaf.offset for leaf in tree.leaves()] == [0, 1]
    assert [leaf.weight for leaf in tree.leaves()] == [Fraction(1, 2)] * 2
    assert offsets_from_tree(tree, assign_leaves(tree, (2, 2))) == (0, 1)

def test_worked_example():
    rates = [Fraction(1, period) for period in EXAMPLE_PERIODS]
    tree = build_splitting_tree(rates)
    assert tree is not None
    assert sorted(leaf.period for leaf in tree.used_leaves()) == sorted(EXAMPLE_PERIODS)

    schedule = schedule_from_periods(EXAMPLE_PERIODS)
    assert schedule.offsets == EXAMPLE_OFFSETS
    assert schedule.hyperperiod == 60
    assert collision_scan(schedule) == []

    actions = generate_schedule(schedule, schedule.hyperperiod)
    assert np.count_nonzero(actions) == 15 + 10 + 3 * 3 + 2 * 5

def test_candidate_tree_bound():
    assert candidate_tree_bound(EXAMPLE_PERIODS) == 4
    assert candidate_tree_bound((2, 2)) == 1

def test_no_tree_for_half_and_third():
    assert build_splitting_tree([Fraction(1, 2), Fraction(1, 3)]) is None

def test_rates_above_one_have_no_tree():
    assert build_splitting_tree([Fraction(1, 2), Fraction(1, 2), Fraction(1, 4)]) is None

def test_non_reciprocal_rates_are_rejected():
    with pytest.raises(ParameterError):
        build_splitting_tree([Fraction(2, 5)])
    with pytest.raises(ParameterError):
        periods_from_rates([0])

def test_offsets_need_distinct_leaves():
    tree = build_splitting_tree([Fraction(1, 2), Fraction(1, 2)])
    leaf = tree.leaves()[0]
    with pytest.raises(ParameterError):
        offsets_from_tree(tree, [leaf, leaf])

def test_generate_schedule():
    assert generate_schedule(CyclicSchedule((0, 1), (2, 2)), 6).tolist() == [1, 2, 1, 2, 1, 2]
    with pytest.raises(ValidationError):
        generate_schedule(CyclicSchedule((0, 0), (4, 6)), 12)

def test_table_schedule_realizes_the_rates():
    schedule = design_eus(table_rates(0.1))
    assert schedule.periods == (120, 60, 40, 20)
    actions = generate_schedule(schedule, schedule.hyperperiod * 3)
    for source, period in enumerate(schedule.periods, start=1):
        assert np.count_nonzero(actions == source) == 3 * schedule.hyperperiod // period

@pytest.mark.parametrize("rho", [0.1, 1 / 6, 0.2, 0.25, 0.5])
def test_table_rows_with_schedule(rho):
    schedule = design_eus(table_rates(rho))
    assert schedule is not None
    assert float(sum(schedule.rates)) == pytest.approx(rho)
    assert collision_scan(schedule) == []

@pytest.mark.parametrize("rho", [0.3, 0.8, 1.0])
def test_table_rows_without_schedule(rho):
    assert design_eus(table_rates(rho)) is None

def test_admissible_periods():
    assert admissible_periods([0.25, 0.05]) == (4, 20)
    assert admissible_periods([0.3]) is None
    assert admissible_periods([0.0]) is None

def test_is_divisible_rates():
    assert is_divisible_rates((2, 4, 8, 8))
    assert not is_divisible_rates((4, 6))

def test_random_multisets_give_admissible_schedules():
    rng = np.random.default_rng(2024)
    built = 0
    for _ in range(1000):
        size = int(rng.integers(1, 7))
        periods = tuple(int(period) for period in rng.integers(1, 65, size))
        schedule = schedule_from_periods(periods)
        if schedule is None:
            continue
        built += 1
        assert check_eus_condition(schedule.offsets, schedule.periods)
        assert collision_scan(schedule) == []
        assert all(offset < period for offset, period in zip(schedule.offsets, schedule.periods))
        assert len(set(schedule.offsets)) == len(schedule.offsets)
    assert built > 100

@st.composite
def divisible_periods(draw):
    lChain = [draw(st.sampled_from([1, 2, 3]))]
    for factor in draw(st.lists(st.sampled_from([2, 3, 5]), max_size=4)):
        lChain.append(lChain[-1] * factor)
    lPeriods, load = list(), Fraction(0)
    for period in lChain:
        for _ in range(draw(st.integers(min_value=0, max_value=3))):
            if load + Fraction(1, period) <= 1:
                lPeriods.append(period)
                load += Fraction(1, period)
    if not lPeriods:
        lPeriods.append(lChain[-1])
    return tuple(lPeriods)

@settings(max_examples=100)
@given(periods=divisible_periods())
def test_divisible_rates_always_have_a_schedule(periods):
    assert is_divisible_rates(periods)
    schedule = schedule_from_periods(periods)
    assert schedule is not None
    assert collision_scan(schedule) == []

def test_write_schedule_csv(tmp_path):
    path = tmp_path / "schedule.csv"
    write_schedule_csv(CyclicSchedule((0, 1), (2, 4)), 8, path)
    with open(path, newline="") as csvFile:
        lRows = list(csv.reader(csvFile))
    assert lRows[0] == ["slot", "source"]
    assert lRows[1:] == [["0", "1"], ["1", "2"], ["2", "1"], ["4", "1"], ["5", "2"], ["6", "1"]]
