# ==================================================================== #
#  File name:      bounds.py                    #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           05-Oct-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Analytic lower bounds, rate  #  |#   #   $      #|  #
#                  splits and policy            #  |#   #   #      #|  #
#                  guarantees.                  #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.2                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  15-Sep-2026 File created                                            #
#  21-Sep-2026 Added the finite horizon bound                          #
#  05-Oct-2026 Added the randomized policy closed form                 #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Imports   #
# =========== #
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import toeplitz
from scipy.optimize import bisect

from aoi_tools.errors import NumericError, ParameterError

# =============== #
#   Definitions   #
# =============== #
logger = logging.getLogger(__name__)

KKT_TOLERANCE = 1e-10
""" Allowed residual of the rate budget after the multiplier search """
KKT_MAX_ITERATIONS = 200
""" Bisection steps before the multiplier search gives up """

# =========== #
#   Classes   #
# =========== #
@dataclass(frozen=True)
class BoundInputs:
    """
    Network description shared by the bound formulas
    """
    alphas: tuple
    """ Priority weights, summing to 1 """
    epsilons: tuple
    """ Downlink error probabilities """
    rho: float
    """ Rate budget """
    lambdas: tuple = None
    """ Generation probabilities, needed by the randomized-policy formulas """
    T: int = None
    """ Horizon, needed by the finite-horizon bound """
    V: float = None
    """ Lyapunov trade-off parameter, needed by the drift-plus-penalty guarantee """

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(float(alpha) for alpha in self.alphas))
        object.__setattr__(self, "epsilons", tuple(float(epsilon) for epsilon in self.epsilons))
        if len(self.alphas) == 0 or len(self.alphas) != len(self.epsilons):
            raise ParameterError("alphas and epsilons must be non-empty and of equal length")
        if any(alpha <= 0 for alpha in self.alphas):
            raise ParameterError("priority weights must be positive")
        if abs(math.fsum(self.alphas) - 1) > 1e-9:
            raise ParameterError(f"priority weights must sum to 1, got {math.fsum(self.alphas)}")
        if any(not 0 <= epsilon < 1 for epsilon in self.epsilons):
            raise ParameterError("error probabilities must lie in [0, 1)")
        if not 0 < self.rho <= 1:
            raise ParameterError(f"rho must lie in (0, 1], got {self.rho}")
        if self.lambdas is not None:
            object.__setattr__(self, "lambdas", tuple(float(lam) for lam in self.lambdas))
            if len(self.lambdas) != len(self.alphas):
                raise ParameterError("lambdas must have one entry per source")
            if any(not 0 < lam <= 1 for lam in self.lambdas):
                raise ParameterError("generation probabilities must lie in (0, 1]")
        if self.T is not None and (self.T < 1 or int(self.T) != self.T):
            raise ParameterError(f"T must be a positive integer, got {self.T}")
        if self.V is not None and self.V < 0:
            raise ParameterError(f"V must be non-negative, got {self.V}")

    @classmethod
    def from_weights(cls, weights, epsilons, rho:float, **kwargs):
        """
        from_weights Build inputs from unnormalized positive weights

        :param weights: Positive priority weights
        :type weights: sequence[float]
        :param epsilons: Error probabilities
        :type epsilons: sequence[float]
        :param rho: Rate budget
        :type rho: float
        :return: Inputs with weights rescaled to sum to 1
        :rtype: BoundInputs
        """
        total = math.fsum(weights)
        if total <= 0:
            raise ParameterError("priority weights must be positive")
        return cls(tuple(weight / total for weight in weights), tuple(epsilons), rho, **kwargs)

    @classmethod
    def from_config(cls, config, V:float=None):
        """
        from_config Build inputs from a simulated network

        :param config: Network to describe
        :type config: aoi_tools.model.NetworkConfig
        :param V: Lyapunov trade-off parameter, defaults to None
        :type V: float, optional
        :rtype: BoundInputs
        """
        return cls(config.alphas, config.epsilons, config.rho, lambdas=config.lambdas, T=config.horizon, V=V)

    @property
    def size(self):
        """ Number of sources N """
        return len(self.alphas)

    def _require(self, *lNames):
        for name in lNames:
            if getattr(self, name) is None:
                raise ParameterError(f"this bound needs {name} in its inputs")

@dataclass(frozen=True)
class RateSplit:
    """
    Per-source rates (or randomized scheduling probabilities) sharing the budget rho
    """
    rates: tuple
    """ One entry per source, each in [0, rho] """

    def __post_init__(self):
        object.__setattr__(self, "rates", tuple(float(rate) for rate in self.rates))
        if any(rate < 0 for rate in self.rates):
            raise ParameterError("rates must be non-negative")

    def __len__(self):
        return len(self.rates)

    def __getitem__(self, index):
        return self.rates[index]

    def __iter__(self):
        return iter(self.rates)

    @property
    def total(self):
        """ Sum of the rates """
        return math.fsum(self.rates)

# =========== #
#   Methods   #
# =========== #
def _check_horizon(T, U, epsilon):
    if T < 1:
        raise ParameterError(f"T must be at least 1, got {T}")
    if U < 0:
        raise ParameterError(f"U must be non-negative, got {U}")
    if not 0 <= epsilon < 1:
        raise ParameterError(f"epsilon must lie in [0, 1), got {epsilon}")

def f_star(T:float, U:float, epsilon:float):
    """
    f_star Minimum of the relaxed finite-horizon average AoI of one source with U transmissions

    :param T: Horizon in slots
    :type T: float
    :param U: Number of transmissions
    :type U: float
    :param epsilon: Downlink error probability
    :type epsilon: float
    :return: (T/2)(1+e)/(2+(U-1)(1-e)) + 1/2
    :rtype: float
    """
    _check_horizon(T, U, epsilon)
    return (T / 2) * (1 + epsilon) / (2 + (U - 1) * (1 - epsilon)) + 0.5

def x_star(T:float, U:int, epsilon:float):
    """
    x_star Transmission intervals minimizing the relaxed average AoI

    :param T: Horizon in slots
    :type T: float
    :param U: Number of transmissions
    :type U: integer
    :param epsilon: Downlink error probability
    :type epsilon: float
    :return: U+1 intervals, the two boundary ones longer by a factor 1/(1-epsilon)
    :rtype: numpy.ndarray
    """
    _check_horizon(T, U, epsilon)
    denominator = 2 + (U - 1) * (1 - epsilon)
    intervals = np.full(int(U) + 1, T * (1 - epsilon) / denominator)
    intervals[0] = intervals[-1] = T / denominator
    if np.any(intervals > T - 1):
        raise ParameterError(f"the optimal intervals for T={T}, U={U} leave [0, T-1]")
    return intervals

def relaxed_average_aoi(intervals, epsilon:float, T:float):
    """
    relaxed_average_aoi Expected average AoI of given transmission intervals, (1/(2T)) X^T A X + 1/2 with A_ij = epsilon^|i-j|.
    The matrix is built densely, so keep the interval count moderate.

    :param intervals: Intervals between consecutive transmissions
    :type intervals: sequence[float]
    :param epsilon: Downlink error probability
    :type epsilon: float
    :param T: Horizon in slots
    :type T: float
    :rtype: float
    """
    intervals = np.asarray(intervals, dtype=float)
    matrix = toeplitz(np.power(float(epsilon), np.arange(len(intervals))))
    return float(intervals @ matrix @ intervals) / (2 * T) + 0.5

def single_source_lb(rhoN:float, epsilon:float):
    """
    single_source_lb Lower bound on the average AoI of one GAW source served at rate rhoN without feedback

    :param rhoN: Transmission rate of the source
    :type rhoN: float
    :param epsilon: Downlink error probability
    :type epsilon: float
    :rtype: float
    """
    if not 0 < rhoN <= 1:
        raise ParameterError(f"the source rate must lie in (0, 1], got {rhoN}")
    if not 0 <= epsilon < 1:
        raise ParameterError(f"epsilon must lie in [0, 1), got {epsilon}")
    return (1 + epsilon) / (2 * rhoN * (1 - epsilon)) + 0.5

def continuous_time_single_source_lb(epsilon:float):
    """ Continuous-time counterpart of single_source_lb at full rate, (1+e)/(2(1-e)) """
    if not 0 <= epsilon < 1:
        raise ParameterError(f"epsilon must lie in [0, 1), got {epsilon}")
    return (1 + epsilon) / (2 * (1 - epsilon))

def _split(weights:np.ndarray, rho:float):
    return RateSplit(rho * weights / weights.sum())

def rate_split(inputs:BoundInputs):
    """
    rate_split Per-source rates reaching the zero-feedback lower bound

    :param inputs: Network description
    :type inputs: BoundInputs
    :return: rates proportional to sqrt(alpha(1+e)/(1-e)), summing to rho
    :rtype: RateSplit
    """
    alphas, epsilons = np.array(inputs.alphas), np.array(inputs.epsilons)
    return _split(np.sqrt(alphas * (1 + epsilons) / (1 - epsilons)), inputs.rho)

def zero_fb_lb(inputs:BoundInputs):
    """
    zero_fb_lb Lower bound on the EWSAoI of any rate-feasible policy without feedback under GAW traffic

    :param inputs: Network description
    :type inputs: BoundInputs
    :rtype: float
    """
    alphas, epsilons = np.array(inputs.alphas), np.array(inputs.epsilons)
    total = np.sqrt(alphas * (1 + epsilons) / (1 - epsilons)).sum()
    return float(total ** 2 / (2 * inputs.rho) + 0.5)

def perfect_fb_lb(inputs:BoundInputs):
    """
    perfect_fb_lb Lower bound on the EWSAoI with instantaneous error-free feedback, used as a reference

    :param inputs: Network description
    :type inputs: BoundInputs
    :rtype: float
    """
    alphas, epsilons = np.array(inputs.alphas), np.array(inputs.epsilons)
    total = np.sqrt(alphas / (1 - epsilons)).sum()
    correction = (inputs.rho / 2) * np.min(alphas * epsilons / (1 - epsilons))
    return float(total ** 2 / (2 * inputs.rho) + correction + 0.5)

def bound_ratio_symmetric(N:int, epsilon:float, rho:float):
    """
    bound_ratio_symmetric Ratio zero_fb_lb / perfect_fb_lb of a symmetric network in closed form

    :param N: Number of sources
    :type N: integer
    :param epsilon: Common error probability
    :type epsilon: float
    :param rho: Rate budget
    :type rho: float
    :rtype: float
    """
    return 1 + epsilon * (N ** 2 - rho ** 2) / (N * rho * (1 - epsilon) + N ** 2 + epsilon * rho ** 2)

def finite_horizon_rate_split(inputs:BoundInputs):
    """
    finite_horizon_rate_split Rates minimizing the finite-horizon relaxed EWSAoI.
    The stationarity condition is inverted per source for a given multiplier, s = 1/sqrt(mu) is then found by bisection.

    :param inputs: Network description with T
    :type inputs: BoundInputs
    :raises NumericError: The bisection did not reach KKT_TOLERANCE
    :return: The rates and the residual of the budget constraint
    :rtype: tuple[RateSplit, float]
    """
    inputs._require("T")
    alphas, epsilons = np.array(inputs.alphas), np.array(inputs.epsilons)
    T, rho = float(inputs.T), inputs.rho

    if inputs.size == 1:
        return RateSplit((rho,)), 0.0

    # T rho_n (1-e) + 1 + e = s * sqrt(alpha T^2 (1-e^2) / 2)
    slopes = np.sqrt(alphas * T ** 2 * (1 - epsilons ** 2) / 2)

    def rates_at(s):
        return np.clip((s * slopes - (1 + epsilons)) / (T * (1 - epsilons)), 0.0, rho)

    def residual(s):
        return math.fsum(rates_at(s)) - rho

    upper = float(np.max((T * rho * (1 - epsilons) + 1 + epsilons) / slopes))
    try:
        s = bisect(residual, 0.0, upper, xtol=1e-300, rtol=4 * np.finfo(float).eps, maxiter=KKT_MAX_ITERATIONS)
    except (RuntimeError, ValueError) as error:
        raise NumericError(f"multiplier search failed: {error}") from error

    rates = rates_at(s)
    remaining = residual(s)
    logger.debug("finite-horizon multiplier s=%r, residual %.3e", s, remaining)
    if abs(remaining) > KKT_TOLERANCE:
        raise NumericError(f"multiplier search stopped with residual {remaining:.3e}")
    return RateSplit(rates), remaining

def finite_horizon_lb(inputs:BoundInputs):
    """
    finite_horizon_lb Lower bound on the EWSAoI over T slots without feedback under GAW traffic

    :param inputs: Network description with T
    :type inputs: BoundInputs
    :rtype: float
    """
    split, _ = finite_horizon_rate_split(inputs)
    T = inputs.T
    return math.fsum(
        alpha * f_star(T, T * rate, epsilon)
        for alpha, epsilon, rate in zip(inputs.alphas, inputs.epsilons, split)
    )

def eta_star(inputs:BoundInputs):
    """
    eta_star Scheduling probabilities of the optimal stationary randomized policy

    :param inputs: Network description
    :type inputs: BoundInputs
    :return: probabilities proportional to sqrt(alpha/(1-e)), summing to rho
    :rtype: RateSplit
    """
    alphas, epsilons = np.array(inputs.alphas), np.array(inputs.epsilons)
    return _split(np.sqrt(alphas / (1 - epsilons)), inputs.rho)

def theta(alpha:float, epsilon:float, eta:float):
    """
    theta Weight of the local age in the hybrid Lyapunov function

    :param alpha: Priority weight
    :type alpha: float
    :param epsilon: Downlink error probability
    :type epsilon: float
    :param eta: Scheduling probability of the source
    :type eta: float
    :return: alpha(1-(1-e)eta)/((1-e)eta)
    :rtype: float
    """
    service = (1 - epsilon) * eta
    if service <= 0:
        raise ParameterError("theta needs (1-epsilon)*eta > 0")
    return alpha * (1 - service) / service

def randomized_ewsaoi(inputs:BoundInputs, eta:RateSplit):
    """
    randomized_ewsaoi EWSAoI of the stationary randomized policy with scheduling probabilities eta

    :param inputs: Network description with lambdas
    :type inputs: BoundInputs
    :param eta: Scheduling probabilities
    :type eta: RateSplit
    :rtype: float
    """
    inputs._require("lambdas")
    if len(eta) != inputs.size or any(value <= 0 for value in eta):
        raise ParameterError("eta needs one positive entry per source")
    return math.fsum(
        alpha * (1 / ((1 - epsilon) * value) + (1 - lam) / lam)
        for alpha, epsilon, lam, value in zip(inputs.alphas, inputs.epsilons, inputs.lambdas, eta)
    )

def dpp_upper_bound(inputs:BoundInputs):
    """
    dpp_upper_bound Guarantee on the EWSAoI of the drift-plus-penalty policy

    :param inputs: Network description with V and lambdas
    :type inputs: BoundInputs
    :return: V(rho^2+1)/2 plus the optimal randomized EWSAoI
    :rtype: float
    """
    inputs._require("V", "lambdas")
    return inputs.V * (inputs.rho ** 2 + 1) / 2 + randomized_ewsaoi(inputs, eta_star(inputs))

def eus_ewsaoi(inputs:BoundInputs, split:RateSplit):
    """
    eus_ewsaoi EWSAoI of an exact uniform schedule with the given per-source rates

    :param inputs: Network description
    :type inputs: BoundInputs
    :param split: Rate of each source
    :type split: RateSplit
    :rtype: float
    """
    if len(split) != inputs.size:
        raise ParameterError("the split needs one rate per source")
    return math.fsum(
        alpha * single_source_lb(rate, epsilon)
        for alpha, epsilon, rate in zip(inputs.alphas, inputs.epsilons, split)
    )
