# ==================================================================== #
#  File name:      sim.py                       #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           08-Oct-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Slot by slot simulator,      #  |#   #   $      #|  #
#                  replications and sweep       #  |#   #   #      #|  #
#                  trend checks.                #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.2                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  28-Sep-2026 File created                                            #
#  03-Oct-2026 Replications across worker processes                    #
#  08-Oct-2026 Added ordering checks                                   #
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
import multiprocessing
from dataclasses import dataclass, field

import numpy as np

from aoi_tools.bounds import BoundInputs, RateSplit, dpp_upper_bound, eta_star, eus_ewsaoi, perfect_fb_lb, randomized_ewsaoi, zero_fb_lb
from aoi_tools.errors import ParameterError
from aoi_tools.estimator import ConditionalAgeEstimator
from aoi_tools.model import FeedbackSignal, Mechanism, NetworkConfig, SourceState, evolve_aoi, feedback_from_draw, local_age_block, success_from_draw
from aoi_tools.streams import BLOCK_SLOTS, ReplicationStreams
from aoi_tools.tools import POLICY_DPP, POLICY_EUS, POLICY_MAX_WEIGHT, POLICY_RANDOMIZED, is_policy_this, is_policy_this_list, make_policy

# =============== #
#   Definitions   #
# =============== #
logger = logging.getLogger(__name__)

INCREASING = "increasing"
DECREASING = "decreasing"

dAxisDirections = {
    "rho": DECREASING,
    "epsilon": INCREASING,
    "delay": INCREASING,
    "sigma": INCREASING,
    "lambda": DECREASING,
}
""" Expected direction of the EWSAoI along each swept parameter """

TRACE_HEADER = ["slot", "source", "a", "v", "w", "hhat", "h"]

# =========== #
#   Classes   #
# =========== #
@dataclass(frozen=True)
class SimReport:
    """
    Time averages of one replication, or their means over several replications
    """
    policy: str
    """ Name of the simulated policy """
    mechanism: str
    """ Feedback mechanism """
    horizon: int
    """ Slots per replication """
    seed: int
    """ Seed of the (first) replication """
    ewsaoi: float
    """ Time average of sum alpha_n h_n """
    rate: float
    """ Transmissions per slot """
    qOverT: float
    """ Final virtual queue level over the horizon """
    perSourceAoi: tuple
    """ Time average AoI of each source """
    perSourceRate: tuple
    """ Transmissions per slot of each source """
    hhatEwsaoi: float
    """ Time average of sum alpha_n hhat_n """
    boundLower: float = None
    """ Lower bound the policy is compared to """
    boundUpper: float = None
    """ Analytic guarantee or closed form of the policy, None when there is none """
    replications: int = 1
    """ Number of aggregated replications """
    ewsaoiStderr: float = 0.0
    """ Standard error of ewsaoi across replications """
    lReplications: tuple = field(default=(), compare=False, repr=False)
    """ Reports of the aggregated replications """

@dataclass(frozen=True)
class OrderingVerdict:
    """
    Whether mean EWSAoI moves in the expected direction along a sweep
    """
    direction: str
    """ INCREASING or DECREASING """
    monotone: bool
    """ No step goes against the direction by more than two pooled standard errors """
    strict: bool
    """ Every step goes strictly in the direction """
    lViolations: tuple = ()
    """ Index pairs of the offending steps """

# =========== #
#   Methods   #
# =========== #
def analytic_bounds(config:NetworkConfig, policy, V:float=1.0):
    """
    analytic_bounds Lower bound and policy-specific closed form reported next to a simulation

    :param config: Simulated network
    :type config: NetworkConfig
    :param policy: The policy of the replication
    :type policy: aoi_tools.policies.Policy
    :param V: Trade-off parameter of the drift-plus-penalty policy, defaults to 1.0
    :type V: float, optional
    :return: (lower, upper), upper is None when the policy has no closed form
    :rtype: tuple[float, float]
    """
    inputs = BoundInputs.from_config(config, V)
    gawOnly = all(source.is_gaw for source in config.sources)
    zeroFeedback = all(source.is_zero_feedback for source in config.sources)
    lower = zero_fb_lb(inputs) if gawOnly and zeroFeedback else perfect_fb_lb(inputs)

    upper = None
    if is_policy_this_list(policy, POLICY_DPP, POLICY_MAX_WEIGHT):
        upper = dpp_upper_bound(BoundInputs.from_config(config, policy.state.V))
    elif is_policy_this(policy, POLICY_RANDOMIZED):
        upper = randomized_ewsaoi(inputs, eta_star(inputs))
    elif is_policy_this(policy, POLICY_EUS) and gawOnly:
        upper = eus_ewsaoi(inputs, RateSplit(float(rate) for rate in policy.schedule.rates))
    return lower, upper

def run_replication(config:NetworkConfig, policy:str=POLICY_DPP, mechanism:Mechanism=None, seed:int=None, V:float=1.0, tracePath=None, fast:bool=True):
    """
    run_replication Simulate one replication of config.horizon slots.
    Within slot t: generation and local ages, decision, channel outcome, AoI update, then the feedback about
    slot t-D is released and folded into the estimate of slot t+1, and the virtual queue is updated.

    :param config: Network to simulate
    :type config: NetworkConfig
    :param policy: One of the POLICY_* names, defaults to POLICY_DPP
    :type policy: string, optional
    :param mechanism: Feedback mechanism, defaults to the one of config
    :type mechanism: Mechanism, optional
    :param seed: Replication seed, defaults to config.seed
    :type seed: integer, optional
    :param V: Trade-off parameter of the drift-plus-penalty policy, defaults to 1.0
    :type V: float, optional
    :param tracePath: CSV file receiving one row per slot and source, defaults to None
    :type tracePath: str or pathlib.Path, optional
    :param fast: Constant-time estimator update, defaults to True
    :type fast: boolean, optional
    :rtype: SimReport
    """
    if not isinstance(config, NetworkConfig):
        raise ParameterError("run_replication needs a NetworkConfig")
    mechanism = config.mechanism if mechanism is None else mechanism
    seed = config.seed if seed is None else seed
    if seed < 0:
        raise ParameterError(f"seeds must be non-negative, got {seed}")

    size, horizon, rho = config.size, config.horizon, config.rho
    streams = ReplicationStreams(seed, size)
    policyObject = make_policy(policy, config, streams, V)
    logger.debug("replication seed=%d policy=%s mechanism=%s started", seed, policy, mechanism.value)

    lAlphas = list(config.alphas)
    lEpsilons = list(config.epsilons)
    lSigmas = [source.sigma for source in config.sources]
    lStates = [SourceState.initial(source) for source in config.sources]
    lEstimators = [
        ConditionalAgeEstimator(source.epsilon, source.sigma, source.delay, mechanism, fast)
        for source in config.sources
    ]
    lAoiSums = [0] * size
    lHhatSums = [0.0] * size
    lTransmissions = [0] * size
    Q = 0.0

    traceFile, traceWriter = None, None
    if tracePath is not None:
        traceFile = open(tracePath, "w", newline="")
        traceWriter = csv.writer(traceFile)
        traceWriter.writerow(TRACE_HEADER)

    try:
        for blockStart in range(0, horizon, BLOCK_SLOTS):
            blockLength = min(BLOCK_SLOTS, horizon - blockStart)
            # Draw the block
            llW, llChannel, llFeedback = list(), list(), list()
            for n, source in enumerate(config.sources):
                generated = streams.lGeneration[n].block(blockStart)[:blockLength] < source.lam
                if blockStart == 0:
                    # w_0 = 0
                    generated[0] = True
                llW.append(local_age_block(lStates[n].w, generated).tolist())
                llChannel.append(streams.lChannel[n].block(blockStart)[:blockLength].tolist())
                llFeedback.append(streams.lFeedback[n].block(blockStart)[:blockLength].tolist())

            for k in range(blockLength):
                t = blockStart + k
                # Decide
                lW = [lAges[k] for lAges in llW]
                lHhat = [estimator.hhat for estimator in lEstimators]
                scheduled = policyObject.decide(t, lW, lHhat).scheduled

                for n in range(size):
                    state, w = lStates[n], lW[n]
                    state.w = w
                    lAoiSums[n] += state.h
                    lHhatSums[n] += lHhat[n]

                    # Transmit
                    a = 1 if scheduled == n + 1 else 0
                    u = success_from_draw(a, lEpsilons[n], llChannel[n][k]) if a else 0

                    # Feedback
                    v = 0
                    pipeline = state.inflight
                    if pipeline is not None:
                        if a:
                            pipeline.push(FeedbackSignal(n + 1, feedback_from_draw(mechanism, a, u, lSigmas[n], llFeedback[n][k]), t, a))
                        released = pipeline.release(t)
                        if released is not None:
                            v = released.value

                    if traceWriter is not None:
                        traceWriter.writerow([t, n + 1, a, v, w, repr(lHhat[n]), state.h])

                    # Estimate and age
                    lEstimators[n].step(a, w, v)
                    state.h = evolve_aoi(state.h, w, u)

                # Budget
                total = 0 if scheduled is None else 1
                if total:
                    lTransmissions[scheduled - 1] += 1
                policyObject.update(total)
                Q = max(Q - rho + total, 0.0)
    finally:
        if traceFile is not None:
            traceFile.close()

    # Time averages
    perSourceAoi = tuple(aoiSum / horizon for aoiSum in lAoiSums)
    lower, upper = analytic_bounds(config, policyObject, V)
    report = SimReport(
        policy=policy,
        mechanism=mechanism.value,
        horizon=horizon,
        seed=seed,
        ewsaoi=math.fsum(alpha * aoiSum for alpha, aoiSum in zip(lAlphas, lAoiSums)) / horizon,
        rate=sum(lTransmissions) / horizon,
        qOverT=Q / horizon,
        perSourceAoi=perSourceAoi,
        perSourceRate=tuple(count / horizon for count in lTransmissions),
        hhatEwsaoi=math.fsum(alpha * hhatSum for alpha, hhatSum in zip(lAlphas, lHhatSums)) / horizon,
        boundLower=lower,
        boundUpper=upper,
    )
    logger.debug("replication seed=%d finished: ewsaoi=%.6g rate=%.6g", seed, report.ewsaoi, report.rate)
    return report

def aggregate_reports(lReports:list):
    """
    aggregate_reports Mean and standard error over replications

    :param lReports: Reports of the replications, same config and policy
    :type lReports: list[SimReport]
    :rtype: SimReport
    """
    if not lReports:
        raise ParameterError("nothing to aggregate")
    if len(lReports) == 1:
        return lReports[0]

    ewsaoi = np.array([report.ewsaoi for report in lReports])
    first = lReports[0]
    return SimReport(
        policy=first.policy,
        mechanism=first.mechanism,
        horizon=first.horizon,
        seed=first.seed,
        ewsaoi=float(ewsaoi.mean()),
        rate=float(np.mean([report.rate for report in lReports])),
        qOverT=float(np.mean([report.qOverT for report in lReports])),
        perSourceAoi=tuple(np.mean([report.perSourceAoi for report in lReports], axis=0).tolist()),
        perSourceRate=tuple(np.mean([report.perSourceRate for report in lReports], axis=0).tolist()),
        hhatEwsaoi=float(np.mean([report.hhatEwsaoi for report in lReports])),
        boundLower=first.boundLower,
        boundUpper=first.boundUpper,
        replications=len(lReports),
        ewsaoiStderr=float(ewsaoi.std(ddof=1) / math.sqrt(len(lReports))),
        lReplications=tuple(lReports),
    )

def run_experiment(config:NetworkConfig, policy:str=POLICY_DPP, replications:int=10, mechanism:Mechanism=None, V:float=1.0, workers:int=1):
    """
    run_experiment Run replications with seeds config.seed, config.seed+1, ... and aggregate them

    :param config: Network to simulate
    :type config: NetworkConfig
    :param policy: One of the POLICY_* names, defaults to POLICY_DPP
    :type policy: string, optional
    :param replications: Number of replications, defaults to 10
    :type replications: integer, optional
    :param mechanism: Feedback mechanism, defaults to the one of config
    :type mechanism: Mechanism, optional
    :param V: Trade-off parameter of the drift-plus-penalty policy, defaults to 1.0
    :type V: float, optional
    :param workers: Worker processes, 1 runs everything in this process, defaults to 1
    :type workers: integer, optional
    :rtype: SimReport
    """
    if replications < 1:
        raise ParameterError(f"at least one replication is needed, got {replications}")
    lArguments = [(config, policy, mechanism, config.seed + offset, V) for offset in range(replications)]
    logger.info("running %d replications of %s on %r", replications, policy, config)

    if workers > 1 and replications > 1:
        with multiprocessing.Pool(processes=min(workers, replications)) as pool:
            lReports = pool.starmap(run_replication, lArguments)
    else:
        lReports = [run_replication(*arguments) for arguments in lArguments]
    return aggregate_reports(lReports)

def ordering_check(lReports:list, parameter:str=None, direction:str=None):
    """
    ordering_check Check that the mean EWSAoI moves in the expected direction along a sweep

    :param lReports: Aggregated reports ordered by ascending parameter value
    :type lReports: list[SimReport]
    :param parameter: Swept parameter, sets the direction when direction is omitted, defaults to None
    :type parameter: string, optional
    :param direction: INCREASING or DECREASING, defaults to None
    :type direction: string, optional
    :rtype: OrderingVerdict
    """
    if direction is None:
        if parameter not in dAxisDirections:
            raise ParameterError(f"no expected direction known for parameter {parameter!r}")
        direction = dAxisDirections[parameter]
    if direction not in (INCREASING, DECREASING):
        raise ParameterError(f"direction must be {INCREASING!r} or {DECREASING!r}")

    sign = 1 if direction == INCREASING else -1
    lViolations, strict = list(), True
    for index, (previous, current) in enumerate(zip(lReports, lReports[1:])):
        step = sign * (current.ewsaoi - previous.ewsaoi)
        pooled = math.hypot(previous.ewsaoiStderr, current.ewsaoiStderr)
        if step <= 0:
            strict = False
        if step < -2 * pooled:
            lViolations.append((index, index + 1))
    return OrderingVerdict(direction, not lViolations, strict and len(lReports) > 1, tuple(lViolations))
