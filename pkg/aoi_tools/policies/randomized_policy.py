# ==================================================================== #
#  File name:      randomized_policy.py         #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           25-Sep-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Stationary randomized        #  |#   #   $      #|  #
#                  policy.                      #  |#   #   #      #|  #
#                                               #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.0                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  25-Sep-2026 File created                                            #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Imports   #
# =========== #
import bisect
import itertools
import math

from aoi_tools.bounds import RateSplit
from aoi_tools.errors import ParameterError
from aoi_tools.policies.policy import IDLE, Decision, Policy

# =========== #
#   Classes   #
# =========== #
class RandomizedPolicy(Policy):
    """
    Stationary randomized policy: source n is scheduled with probability eta_n, independently of the state
    """
    name = "randomized"

    def __init__(self, eta:RateSplit, stream):
        """
        __init__ Constructor

        :param eta: Scheduling probability of each source, summing to at most 1
        :type eta: RateSplit
        :param stream: Slot-indexed uniform draws, anything with an at(t) method
        :type stream: aoi_tools.streams.SlotStream
        """
        if math.fsum(eta) > 1 + 1e-12:
            raise ParameterError("scheduling probabilities must sum to at most 1")
        self.eta = eta
        """ Scheduling probabilities """
        self.stream = stream
        """ Source of the uniform draw of each slot """
        self.lCumulative = list(itertools.accumulate(eta))
        """ Right ends of the probability intervals of the sources """

    def __repr__(self):
        """
        Representation of this class when it is printed or viewed in debugger window
        """
        return f"RandomizedPolicy(eta={tuple(self.eta)})"

    def decide(self, t:int, lW:list=None, lHhat:list=None):
        return randomized_decide(self.lCumulative, self.stream.at(t))

# =========== #
#   Methods   #
# =========== #
def randomized_decide(lCumulative:list, draw:float):
    """
    randomized_decide Map one uniform draw onto the cumulative scheduling probabilities

    :param lCumulative: Running sums of the scheduling probabilities
    :type lCumulative: list[float]
    :param draw: Uniform draw in [0, 1)
    :type draw: float
    :return: The source whose interval holds the draw, idle beyond the last interval
    :rtype: Decision
    """
    position = bisect.bisect_right(lCumulative, draw)
    if position < len(lCumulative):
        return Decision(position + 1)
    return IDLE
