from aoi_tools.errors import AoIToolsError, ConfigParseError, NumericError, ParameterError, ProtocolError, ValidationError
from aoi_tools.model import INFINITE_DELAY, FeedbackPipeline, FeedbackSignal, Mechanism, NetworkConfig, SourceParams, SourceState, channel_outcome, evolve_aoi, evolve_local_age, feedback_outcome, normalize_sources
from aoi_tools.bounds import BoundInputs, RateSplit, dpp_upper_bound, eta_star, eus_ewsaoi, f_star, finite_horizon_lb, perfect_fb_lb, randomized_ewsaoi, rate_split, single_source_lb, theta, x_star, zero_fb_lb
from aoi_tools.estimator import ConditionalAgeEstimator, ack_delayed_update, acknack_delayed_update, zero_fb_update
from aoi_tools.tools import POLICY_DPP, POLICY_EUS, POLICY_MAX_WEIGHT, POLICY_RANDOMIZED, POLICY_ROUND_ROBIN, is_policy_this, is_policy_this_list, make_policy
from aoi_tools.sim import OrderingVerdict, SimReport, ordering_check, run_experiment, run_replication
