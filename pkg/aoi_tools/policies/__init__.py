from aoi_tools.policies.policy import IDLE, Decision, Policy
from aoi_tools.policies.dpp_policy import DppPolicy, DppState, dpp_decide, virtual_queue_update
from aoi_tools.policies.randomized_policy import RandomizedPolicy, randomized_decide
from aoi_tools.policies.eus_policy import EusPolicy, eus_decide
from aoi_tools.policies.round_robin_policy import RoundRobinPolicy, round_robin_decide
