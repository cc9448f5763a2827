# ==================================================================== #
#  File name:      cyclic_schedule.py           #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           22-Sep-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Cyclic schedules, their      #  |#   #   $      #|  #
#                  verification and design.     #  |#   #   #      #|  #
#                                               #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.0                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  22-Sep-2026 File created                                            #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Imports   #
# =========== #
import csv
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from aoi_tools.errors import ParameterError, ValidationError
from aoi_tools.eus.splitting_tree import SplittingTree, build_splitting_tree

# =============== #
#   Definitions   #
# =============== #
logger = logging.getLogger(__name__)

PERIOD_TOLERANCE = 1e-9
""" Relative distance to the nearest integer under which a float period is accepted """

# =========== #
#   Classes   #
# =========== #
@dataclass(frozen=True)
class CyclicSchedule:
    """
    Source n transmits at slots offsets[n-1] + k*periods[n-1], k = 0, 1, ...
    """
    offsets: tuple
    """ First transmission slot of each source """
    periods: tuple
    """ Integer period of each source """

    def __post_init__(self):
        object.__setattr__(self, "offsets", tuple(int(offset) for offset in self.offsets))
        object.__setattr__(self, "periods", _integer_periods(self.periods))
        if len(self.offsets) != len(self.periods):
            raise ParameterError("a cyclic schedule needs one offset per period")
        if any(offset < 0 for offset in self.offsets):
            raise ParameterError("offsets must be non-negative")

    @property
    def size(self):
        """ Number of sources """
        return len(self.periods)

    @property
    def hyperperiod(self):
        """ Least common multiple of the periods """
        return math.lcm(*self.periods)

    @property
    def rates(self):
        """ Exact rate of each source """
        return tuple(Fraction(1, period) for period in self.periods)

# =========== #
#   Methods   #
# =========== #
def _integer_periods(periods):
    lPeriods = list()
    for period in periods:
        if isinstance(period, bool) or int(period) != period or period < 1:
            raise ParameterError(f"period {period!r} is not a positive integer")
        lPeriods.append(int(period))
    return tuple(lPeriods)

def check_eus_condition(offsets, periods):
    """
    check_eus_condition Whether sources with these offsets and periods never collide,
    i.e. offsets of any two sources differ modulo the gcd of their periods

    :param offsets: First transmission slot of each source
    :type offsets: sequence[integer]
    :param periods: Period of each source
    :type periods: sequence[integer]
    :raises ParameterError: A period is not a positive integer
    :rtype: boolean
    """
    periods = _integer_periods(periods)
    if len(offsets) != len(periods):
        raise ParameterError("one offset per period is needed")
    for n in range(len(periods)):
        for m in range(n + 1, len(periods)):
            common = math.gcd(periods[n], periods[m])
            if (offsets[n] - offsets[m]) % common == 0:
                return False
    return True

def assign_leaves(tree:SplittingTree, periods):
    """
    assign_leaves Default source to leaf assignment: sources sharing a period take the matching leaves
    in ascending source order and ascending offset order

    :param tree: Tree built for these periods
    :type tree: SplittingTree
    :param periods: Period of each source
    :type periods: sequence[integer]
    :raises ParameterError: The tree lacks leaves for some period
    :return: Leaf of each source
    :rtype: list[SplittingTreeNode]
    """
    dLeaves = defaultdict(list)
    for leaf in sorted(tree.used_leaves(), key=lambda node: node.offset):
        dLeaves[leaf.period].append(leaf)

    lAssignment = list()
    for period in periods:
        if not dLeaves[period]:
            raise ParameterError(f"the tree has no free leaf of period {period}")
        lAssignment.append(dLeaves[period].pop(0))
    return lAssignment

def offsets_from_tree(tree:SplittingTree, assignment):
    """
    offsets_from_tree First transmission slots read from the root-to-leaf edge sums

    :param tree: Splitting tree
    :type tree: SplittingTree
    :param assignment: Leaf of each source, all distinct and all from this tree
    :type assignment: sequence[SplittingTreeNode]
    :raises ParameterError: The assignment is not injective onto the tree's leaves
    :rtype: tuple[integer]
    """
    lLeafIds = [id(leaf) for leaf in tree.leaves()]
    lChosen = [id(leaf) for leaf in assignment]
    if len(set(lChosen)) != len(lChosen) or not set(lChosen) <= set(lLeafIds):
        raise ParameterError("the assignment must map sources to distinct leaves of the tree")
    return tuple(leaf.offset for leaf in assignment)

def schedule_from_periods(periods):
    """
    schedule_from_periods Build a cyclic schedule from integer periods through a splitting tree

    :param periods: Period of each source
    :type periods: sequence[integer]
    :return: The schedule, None when no splitting tree exists
    :rtype: CyclicSchedule
    """
    periods = _integer_periods(periods)
    tree = build_splitting_tree(Fraction(1, period) for period in periods)
    if tree is None:
        return None
    return CyclicSchedule(offsets_from_tree(tree, assign_leaves(tree, periods)), periods)

def admissible_periods(rates, tolerance:float=PERIOD_TOLERANCE):
    """
    admissible_periods Round float rates to integer periods

    :param rates: Per-source rates
    :type rates: iterable[float]
    :param tolerance: Relative distance to the nearest integer accepted, defaults to PERIOD_TOLERANCE
    :type tolerance: float, optional
    :return: The periods, None when some 1/rate is not close to an integer
    :rtype: tuple[integer]
    """
    lPeriods = list()
    for rate in rates:
        if rate <= 0:
            return None
        period = 1 / rate
        rounded = round(period)
        if rounded < 1 or abs(period - rounded) > tolerance * period:
            return None
        lPeriods.append(rounded)
    return tuple(lPeriods)

def is_divisible_rates(periods):
    """ True when, in ascending order, every period divides the next one """
    lSorted = sorted(_integer_periods(periods))
    return all(larger % smaller == 0 for smaller, larger in zip(lSorted, lSorted[1:]))

def design_eus(rates, tolerance:float=PERIOD_TOLERANCE):
    """
    design_eus Exact uniform schedule for float rates

    :param rates: Per-source rates, typically a rate split
    :type rates: iterable[float]
    :param tolerance: Relative tolerance of the period rounding, defaults to PERIOD_TOLERANCE
    :type tolerance: float, optional
    :return: The schedule, None when the rates have no integer periods or no splitting tree exists
    :rtype: CyclicSchedule
    """
    periods = admissible_periods(list(rates), tolerance)
    if periods is None:
        logger.info("no EUS constructed: the rates are not reciprocals of integers")
        return None
    schedule = schedule_from_periods(periods)
    if schedule is None:
        logger.info("no EUS constructed: no splitting tree for periods %s", periods)
    return schedule

def collision_scan(schedule:CyclicSchedule):
    """
    collision_scan Slots where two sources transmit, scanning long enough to cover every pattern

    :param schedule: Schedule to inspect
    :type schedule: CyclicSchedule
    :return: Colliding slots
    :rtype: list[integer]
    """
    length = max(schedule.offsets) + schedule.hyperperiod
    occupancy = np.zeros(length, dtype=int)
    for offset, period in zip(schedule.offsets, schedule.periods):
        occupancy[offset::period] += 1
    return np.flatnonzero(occupancy > 1).tolist()

def generate_schedule(schedule:CyclicSchedule, horizon:int):
    """
    generate_schedule Per-slot actions of a cyclic schedule

    :param schedule: Admissible schedule
    :type schedule: CyclicSchedule
    :param horizon: Number of slots
    :type horizon: integer
    :raises ValidationError: Two sources of the schedule collide
    :return: Scheduled source index per slot, 0 when idle
    :rtype: numpy.ndarray[int]
    """
    if not check_eus_condition(schedule.offsets, schedule.periods):
        raise ValidationError(f"schedule {schedule} has colliding sources")
    actions = np.zeros(int(horizon), dtype=int)
    for index, (offset, period) in enumerate(zip(schedule.offsets, schedule.periods), start=1):
        actions[offset::period] = index
    return actions

def write_schedule_csv(schedule:CyclicSchedule, horizon:int, path):
    """
    write_schedule_csv Write the (slot, source) rows of the busy slots

    :param schedule: Admissible schedule
    :type schedule: CyclicSchedule
    :param horizon: Number of slots
    :type horizon: integer
    :param path: Destination file
    :type path: str or pathlib.Path
    """
    actions = generate_schedule(schedule, horizon)
    with open(path, "w", newline="") as csvFile:
        writer = csv.writer(csvFile)
        writer.writerow(["slot", "source"])
        for slot in np.flatnonzero(actions).tolist():
            writer.writerow([slot, int(actions[slot])])
