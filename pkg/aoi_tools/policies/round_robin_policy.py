# ==================================================================== #
#  File name:      round_robin_policy.py        #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           25-Sep-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Rate limited round robin     #  |#   #   $      #|  #
#                  baseline.                    #  |#   #   #      #|  #
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
from fractions import Fraction

from aoi_tools.errors import ParameterError
from aoi_tools.policies.policy import IDLE, Decision, Policy

# =============== #
#   Definitions   #
# =============== #
RATE_DENOMINATOR_LIMIT = 10 ** 6
""" Largest denominator used when rho is turned into an exact fraction """

# =========== #
#   Classes   #
# =========== #
class RoundRobinPolicy(Policy):
    """
    Serves the sources in turn on evenly spread transmission opportunities
    """
    name = "round-robin"

    def __init__(self, size:int, rho:float):
        """
        __init__ Constructor

        :param size: Number of sources N
        :type size: integer
        :param rho: Rate budget
        :type rho: float
        """
        if size < 1 or not 0 < rho <= 1:
            raise ParameterError(f"round robin needs N >= 1 and rho in (0, 1], got N={size}, rho={rho}")
        self.size = size
        """ Number of sources """
        self.rho = Fraction(rho).limit_denominator(RATE_DENOMINATOR_LIMIT)
        """ Rate budget as an exact fraction """

    def __repr__(self):
        """
        Representation of this class when it is printed or viewed in debugger window
        """
        return f"RoundRobinPolicy(N={self.size}, rho={self.rho})"

    def decide(self, t:int, lW:list=None, lHhat:list=None):
        return round_robin_decide(self.size, self.rho, t)

# =========== #
#   Methods   #
# =========== #
def round_robin_decide(size:int, rho, t:int):
    """
    round_robin_decide Slot t is the k-th opportunity when floor((t+1)rho) > floor(t rho), it goes to source (k mod N)+1

    :param size: Number of sources N
    :type size: integer
    :param rho: Rate budget, preferably a Fraction so the floors are exact
    :type rho: Fraction or float
    :param t: Slot index
    :type t: integer
    :rtype: Decision
    """
    before = int((t * rho) // 1)
    if int(((t + 1) * rho) // 1) > before:
        return Decision(before % size + 1)
    return IDLE
