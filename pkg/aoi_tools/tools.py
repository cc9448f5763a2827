# ==================================================================== #
#  File name:      tools.py                     #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           26-Sep-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Policy names, policy kind    #  |#   #   $      #|  #
#                  checks and the policy        #  |#   #   #      #|  #
#                  factory.                     #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.0                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  26-Sep-2026 File created                                            #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Imports   #
# =========== #
from aoi_tools.bounds import BoundInputs, eta_star, rate_split
from aoi_tools.errors import ParameterError, ValidationError
from aoi_tools.eus import design_eus
from aoi_tools.model import NetworkConfig
from aoi_tools.policies import DppPolicy, EusPolicy, RandomizedPolicy, RoundRobinPolicy

# =============== #
#   Definitions   #
# =============== #
# Used for policy recognition
POLICY_DPP = "dpp"
POLICY_MAX_WEIGHT = "max-weight"
POLICY_RANDOMIZED = "randomized"
POLICY_EUS = "eus"
POLICY_ROUND_ROBIN = "round-robin"

lPolicyNames = [POLICY_DPP, POLICY_MAX_WEIGHT, POLICY_RANDOMIZED, POLICY_EUS, POLICY_ROUND_ROBIN]
""" Every policy name accepted by make_policy """

# =========== #
#   Methods   #
# =========== #
def make_policy(name:str, config:NetworkConfig, streams=None, V:float=1.0):
    """
    Build a fresh policy for one replication

    :param name: One of the POLICY_* definitions
    :type name: string
    :param config: Simulated network
    :type config: NetworkConfig
    :param streams: Random streams of the replication, needed by the randomized policy, defaults to None
    :type streams: aoi_tools.streams.ReplicationStreams, optional
    :param V: Trade-off parameter of the drift-plus-penalty policy, defaults to 1.0
    :type V: float, optional
    :raises ParameterError: Unknown policy name
    :raises ValidationError: An exact uniform schedule was requested where none can be constructed
    :rtype: aoi_tools.policies.Policy
    """
    inputs = BoundInputs.from_config(config)

    if name == POLICY_DPP:
        return DppPolicy(inputs, V)
    elif name == POLICY_MAX_WEIGHT:
        policy = DppPolicy(inputs, 0.0)
        policy.name = POLICY_MAX_WEIGHT
        return policy
    elif name == POLICY_RANDOMIZED:
        if streams is None:
            raise ParameterError("the randomized policy needs the replication streams")
        return RandomizedPolicy(eta_star(inputs), streams.policy)
    elif name == POLICY_EUS:
        schedule = design_eus(rate_split(inputs).rates)
        if schedule is None:
            raise ValidationError(f"no EUS constructed for rho={config.rho}")
        return EusPolicy(schedule)
    elif name == POLICY_ROUND_ROBIN:
        return RoundRobinPolicy(config.size, config.rho)
    else:
        raise ParameterError(f"unknown policy {name!r}, expected one of {', '.join(lPolicyNames)}")

def is_policy_this(policy, this:str):
    """
    Check if a policy is of a specific kind

    :param policy: Policy to check the kind of
    :type policy: aoi_tools.policies.Policy
    :param this: Kind to compare to, requires the use of the POLICY_* definitions
    :type this: string
    :return: If the policy is indeed of the "this" kind
    :rtype: boolean
    """
    # Compare to the correct policy class
    if this == POLICY_DPP:
        return isinstance(policy, DppPolicy) and policy.state.V > 0
    elif this == POLICY_MAX_WEIGHT:
        return isinstance(policy, DppPolicy) and policy.state.V == 0
    elif this == POLICY_RANDOMIZED:
        return isinstance(policy, RandomizedPolicy)
    elif this == POLICY_EUS:
        return isinstance(policy, EusPolicy)
    elif this == POLICY_ROUND_ROBIN:
        return isinstance(policy, RoundRobinPolicy)
    else:
        return False

def is_policy_this_list(policy, *lThis):
    """
    Check if a policy falls in a list of kinds

    :param policy: Policy to check the kind of
    :type policy: aoi_tools.policies.Policy
    :param lThis: List of POLICY_* definitions to compare to
    :type lThis: list
    :return: If the policy's kind is found in the lThis list
    :rtype: boolean
    """
    # Compare the policy to each kind chosen
    for item in lThis:
        if is_policy_this(policy, item):
            return True

    # None were found so return false
    return False
