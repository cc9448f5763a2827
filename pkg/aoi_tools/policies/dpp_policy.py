# ==================================================================== #
#  File name:      dpp_policy.py                #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           06-Oct-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Drift-plus-penalty policy    #  |#   #   $      #|  #
#                  with a virtual queue,        #  |#   #   #      #|  #
#                  max-weight when V is 0.      #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.1                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  24-Sep-2026 File created                                            #
#  06-Oct-2026 Max-weight as V = 0                                     #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Imports   #
# =========== #
import logging
from dataclasses import dataclass, field

from aoi_tools.bounds import BoundInputs, eta_star, theta
from aoi_tools.errors import ParameterError
from aoi_tools.policies.policy import IDLE, Decision, Policy

# =============== #
#   Definitions   #
# =============== #
logger = logging.getLogger(__name__)

# =========== #
#   Classes   #
# =========== #
@dataclass
class DppState:
    """
    Virtual queue and per-source constants of the drift-plus-penalty policy
    """
    V: float = 1.0
    """ Trade-off between the penalty and the queue drift """
    Q: float = 0.0
    """ Virtual queue of the rate budget """
    thetas: tuple = field(default_factory=tuple)
    """ Weight of the local age of each source in the hybrid Lyapunov function """
    etas: tuple = field(default_factory=tuple)
    """ Optimal randomized scheduling probability of each source """

class DppPolicy(Policy):
    """
    Threshold policy: schedule the source with the largest alpha(hhat-w)/eta index, provided the index reaches V*Q
    """
    name = "dpp"

    def __init__(self, inputs:BoundInputs, V:float=1.0):
        """
        __init__ Constructor

        :param inputs: Network description, the constants are computed once from it
        :type inputs: BoundInputs
        :param V: Trade-off parameter, 0 gives the max-weight policy, defaults to 1.0
        :type V: float, optional
        """
        if V < 0:
            raise ParameterError(f"V must be non-negative, got {V}")
        etas = eta_star(inputs).rates
        self.alphas = inputs.alphas
        """ Priority weights """
        self.rho = inputs.rho
        """ Rate budget """
        self.state = DppState(
            V=V,
            thetas=tuple(theta(alpha, epsilon, eta) for alpha, epsilon, eta in zip(inputs.alphas, inputs.epsilons, etas)),
            etas=etas,
        )
        """ Queue and constants """
        # (1-e)(alpha+theta) equals alpha/eta
        self.lWeights = [(1 - epsilon) * (alpha + thetaN) for alpha, epsilon, thetaN in zip(self.alphas, inputs.epsilons, self.state.thetas)]
        """ Index weight of each source, alpha/eta through the local age weight theta """
        logger.debug("drift-plus-penalty policy with V=%s, eta=%s", V, etas)

    def __repr__(self):
        """
        Representation of this class when it is printed or viewed in debugger window
        """
        return f"DppPolicy(V={self.state.V}, Q={self.state.Q!r}, N={len(self.alphas)})"

    def decide(self, t:int, lW:list, lHhat:list):
        return dpp_decide(self.state, self.lWeights, lW, lHhat)

    def update(self, totalActions:int):
        self.state.Q = virtual_queue_update(self.state.Q, self.rho, totalActions)

# =========== #
#   Methods   #
# =========== #
def virtual_queue_update(Q:float, rho:float, totalActions:int):
    """
    virtual_queue_update Queue level after a slot

    :param Q: Current level
    :type Q: float
    :param rho: Rate budget
    :type rho: float
    :param totalActions: Transmissions of the slot
    :type totalActions: integer
    :return: max(Q - rho + totalActions, 0)
    :rtype: float
    """
    return max(Q - rho + totalActions, 0.0)

def dpp_decide(state:DppState, lWeights:list, lW:list, lHhat:list):
    """
    dpp_decide Threshold decision of the drift-plus-penalty policy, ties go to the lowest source index

    :param state: Queue level and trade-off parameter
    :type state: DppState
    :param lWeights: alpha/eta of each source
    :type lWeights: list[float]
    :param lW: Local age of each source
    :type lW: list[integer]
    :param lHhat: Conditional expected AoI of each source
    :type lHhat: list[float]
    :rtype: Decision
    """
    best, bestIndex = None, None
    for n, (weight, w, hhat) in enumerate(zip(lWeights, lW, lHhat)):
        index = weight * (hhat - w)
        if bestIndex is None or index > bestIndex:
            best, bestIndex = n, index
    if best is not None and state.V * state.Q <= bestIndex:
        return Decision(best + 1)
    return IDLE
