# ==================================================================== #
#  File name:      model.py                     #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           02-Oct-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Sources, network             #  |#   #   $      #|  #
#                  configuration and the slot   #  |#   #   #      #|  #
#                  dynamics of the downlink.    #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.1                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  14-Sep-2026 File created                                            #
#  02-Oct-2026 Added the feedback pipeline                             #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Imports   #
# =========== #
import enum
import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from aoi_tools.errors import ParameterError

# =============== #
#   Definitions   #
# =============== #
INFINITE_DELAY = math.inf
""" Feedback delay sentinel meaning the feedback never arrives (zero feedback) """
ALPHA_TOLERANCE = 1e-12
""" Allowed deviation of the summed priority weights from 1 """

class Mechanism(enum.Enum):
    """
    Feedback mechanisms of the downlink
    """
    ACKS = "ACKS"
    """ Only successful deliveries are acknowledged """
    ACKS_NACKS = "ACKS_NACKS"
    """ Successes are acknowledged and failures negatively acknowledged """

# =========== #
#   Classes   #
# =========== #
@dataclass(frozen=True)
class SourceParams:
    """
    Stochastic parameters of one source. GAW traffic is lam=1, zero feedback is sigma=1 or delay=INFINITE_DELAY
    """
    index: int
    """ Source id in 1..N """
    lam: float
    """ Packet generation probability per slot, in (0, 1] """
    epsilon: float
    """ Downlink error probability, in [0, 1) """
    sigma: float = 1.0
    """ Feedback erasure probability, in [0, 1] """
    delay: float = 0
    """ Feedback delay in slots, non-negative integer or INFINITE_DELAY """
    alpha: float = 1.0
    """ Priority weight, > 0 """

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 1:
            raise ParameterError(f"source index must be a positive integer, got {self.index!r}")
        if not 0 < self.lam <= 1:
            raise ParameterError(f"source {self.index}: lambda must lie in (0, 1], got {self.lam}")
        if not 0 <= self.epsilon < 1:
            raise ParameterError(f"source {self.index}: epsilon must lie in [0, 1), got {self.epsilon}")
        if not 0 <= self.sigma <= 1:
            raise ParameterError(f"source {self.index}: sigma must lie in [0, 1], got {self.sigma}")
        if self.delay != INFINITE_DELAY and (self.delay < 0 or int(self.delay) != self.delay):
            raise ParameterError(f"source {self.index}: delay must be a non-negative integer or inf, got {self.delay}")
        if not self.alpha > 0:
            raise ParameterError(f"source {self.index}: alpha must be positive, got {self.alpha}")

    @property
    def is_gaw(self):
        """ True for generate-at-will traffic """
        return self.lam == 1

    @property
    def is_zero_feedback(self):
        """ True when the access point never learns anything about its transmissions """
        return self.sigma >= 1 or self.delay == INFINITE_DELAY

@dataclass(frozen=True)
class NetworkConfig:
    """
    A network of N sources sharing one downlink under the long-term rate budget rho
    """
    sources: tuple
    """ Tuple of SourceParams, indices 1..N in order """
    rho: float
    """ Allowable maximum transmission rate, in (0, 1] """
    mechanism: Mechanism = Mechanism.ACKS_NACKS
    """ Feedback mechanism shared by all sources """
    horizon: int = 100000
    """ Number of simulated slots T """
    seed: int = 0
    """ Seed of the first replication """

    def __post_init__(self):
        object.__setattr__(self, "sources", tuple(self.sources))
        if len(self.sources) == 0:
            raise ParameterError("a network needs at least one source")
        for position, source in enumerate(self.sources, start=1):
            if source.index != position:
                raise ParameterError(f"source indices must run 1..N in order, found {source.index} at position {position}")
        if not 0 < self.rho <= 1:
            raise ParameterError(f"rho must lie in (0, 1], got {self.rho}")
        if not isinstance(self.mechanism, Mechanism):
            raise ParameterError(f"unknown feedback mechanism {self.mechanism!r}")
        if int(self.horizon) != self.horizon or self.horizon < 1:
            raise ParameterError(f"horizon must be a positive integer, got {self.horizon}")
        totalAlpha = math.fsum(source.alpha for source in self.sources)
        if abs(totalAlpha - 1) > 1e-9:
            raise ParameterError(f"priority weights must sum to 1, got {totalAlpha}; use normalize_sources first")

    def __repr__(self):
        """
        Representation of this class when it is printed or viewed in debugger window
        """
        return f"NetworkConfig(N={self.size}, rho={self.rho}, mechanism={self.mechanism.value}, horizon={self.horizon}, seed={self.seed})"

    @property
    def size(self):
        """ Number of sources N """
        return len(self.sources)

    @property
    def alphas(self):
        return tuple(source.alpha for source in self.sources)

    @property
    def epsilons(self):
        return tuple(source.epsilon for source in self.sources)

    @property
    def lambdas(self):
        return tuple(source.lam for source in self.sources)

@dataclass(frozen=True)
class FeedbackSignal:
    """
    Feedback about one slot of one source, released to the access point D slots after that slot
    """
    source: int
    """ Source index """
    value: int
    """ -1 (NACK), 0 (nothing), +1 (ACK) """
    aboutSlot: int
    """ Slot whose transmission this signal describes """
    action: int = 0
    """ Whether a transmission happened in aboutSlot """

class FeedbackPipeline:
    """
    FIFO of the feedback of the last D+1 slots of a source. Only slots with a transmission are stored,
    every other slot (slots before 0 included) releases "no transmission" with v=0.
    """

    def __init__(self, source:int, delay:int):
        """
        __init__ Constructor

        :param source: Index of the source the pipeline belongs to
        :type source: integer
        :param delay: Feedback delay D in slots
        :type delay: integer
        """
        if delay == INFINITE_DELAY:
            raise ParameterError("an infinite delay has no pipeline, the feedback is simply never released")
        self.source = source
        """ Source index """
        self.delay = int(delay)
        """ Feedback delay D """
        self.lSignals = deque()
        """ Signals in flight, oldest first, at most D+1 """

    def __repr__(self):
        """
        Representation of this class when it is printed or viewed in debugger window
        """
        return f"FeedbackPipeline(source={self.source}, delay={self.delay}, inflight={len(self.lSignals)})"

    def __len__(self):
        return len(self.lSignals)

    def push(self, signal:FeedbackSignal):
        """
        push Insert the feedback about a transmission of the current slot

        :param signal: Feedback generated in the current slot
        :type signal: FeedbackSignal
        """
        if self.lSignals and signal.aboutSlot <= self.lSignals[-1].aboutSlot:
            raise ParameterError("feedback signals must be pushed in slot order")
        self.lSignals.append(signal)

    def release(self, t:int):
        """
        release Signal observable at the end of slot t, it describes slot t-D

        :param t: Current slot
        :type t: integer
        :return: The signal, None when nothing was transmitted in slot t-D
        :rtype: FeedbackSignal
        """
        if self.lSignals and self.lSignals[0].aboutSlot == t - self.delay:
            return self.lSignals.popleft()
        return None

@dataclass
class SourceState:
    """
    True state of one source: local age w, AoI h and the feedback still in flight
    """
    w: int = 0
    """ Local age in slots """
    h: int = 1
    """ AoI in slots """
    inflight: FeedbackPipeline = field(default=None)
    """ Pipeline of pending feedback, None under zero feedback """

    @classmethod
    def initial(cls, params:SourceParams):
        """
        initial Build the state at t=0 (w=0, h=1, empty pipeline)

        :param params: Parameters of the source
        :type params: SourceParams
        :return: Initial state
        :rtype: SourceState
        """
        if params.is_zero_feedback:
            return cls()
        return cls(inflight=FeedbackPipeline(params.index, params.delay))

# =========== #
#   Methods   #
# =========== #
def normalize_sources(lSources:list):
    """
    normalize_sources Rescale the priority weights of the sources so they sum to 1

    :param lSources: Sources with arbitrary positive weights
    :type lSources: list[SourceParams]
    :return: The sources with normalized weights and whether a rescaling was needed
    :rtype: tuple[tuple[SourceParams], boolean]
    """
    totalAlpha = math.fsum(source.alpha for source in lSources)
    if totalAlpha <= 0:
        raise ParameterError("priority weights must be positive")
    if abs(totalAlpha - 1) <= ALPHA_TOLERANCE:
        return tuple(lSources), False
    return tuple(
        SourceParams(source.index, source.lam, source.epsilon, source.sigma, source.delay, source.alpha / totalAlpha)
        for source in lSources
    ), True

def evolve_local_age(w:int, d:int):
    """
    evolve_local_age Local age of the next slot

    :param w: Current local age
    :type w: integer
    :param d: 1 if a packet is generated at the start of the next slot
    :type d: integer
    :return: 0 after a generation, w+1 otherwise
    :rtype: integer
    """
    return 0 if d else w + 1

def local_age_block(w:int, generated:np.ndarray):
    """
    local_age_block Apply evolve_local_age over a block of generation indicators at once

    :param w: Local age of the slot preceding the block
    :type w: integer
    :param generated: Generation indicators of the block's slots
    :type generated: numpy.ndarray[bool]
    :return: Local ages of the block's slots
    :rtype: numpy.ndarray[int]
    """
    size = len(generated)
    position = np.arange(size)
    # Last slot inside the block with a generation, -1 when none so far
    lastGeneration = np.maximum.accumulate(np.where(generated, position, -1))
    return np.where(lastGeneration >= 0, position - lastGeneration, w + 1 + position)

def evolve_aoi(h:int, w:int, u:int):
    """
    evolve_aoi AoI of the next slot

    :param h: Current AoI
    :type h: integer
    :param w: Current local age
    :type w: integer
    :param u: 1 if the current slot delivered a packet
    :type u: integer
    :return: w+1 after a delivery, h+1 otherwise
    :rtype: integer
    """
    return w + 1 if u else h + 1

def success_from_draw(a:int, epsilon:float, draw:float):
    """ Channel outcome for a uniform draw in [0, 1) """
    return 1 if a and draw >= epsilon else 0

def channel_outcome(a:int, epsilon:float, rng):
    """
    channel_outcome Draw the downlink outcome of a slot

    :param a: 1 if the source transmits
    :type a: integer
    :param epsilon: Downlink error probability
    :type epsilon: float
    :param rng: Stream providing uniform draws through random()
    :type rng: numpy.random.Generator
    :return: 1 on successful delivery
    :rtype: integer
    """
    if not a:
        return 0
    return success_from_draw(a, epsilon, rng.random())

def feedback_from_draw(mechanism:Mechanism, a:int, u:int, sigma:float, draw:float):
    """ Feedback value for a uniform draw in [0, 1) """
    if not a or draw < sigma:
        return 0
    if u:
        return 1
    return -1 if mechanism is Mechanism.ACKS_NACKS else 0

def feedback_outcome(mechanism:Mechanism, a:int, u:int, sigma:float, rng):
    """
    feedback_outcome Draw the feedback the access point will receive about a slot

    :param mechanism: Feedback mechanism
    :type mechanism: Mechanism
    :param a: 1 if the source transmitted
    :type a: integer
    :param u: 1 if the transmission succeeded, must be 0 when a is 0
    :type u: integer
    :param sigma: Feedback erasure probability
    :type sigma: float
    :param rng: Stream providing uniform draws through random()
    :type rng: numpy.random.Generator
    :return: -1, 0 or +1
    :rtype: integer
    """
    if u and not a:
        raise ParameterError("a delivery cannot happen without a transmission")
    if not a:
        return 0
    return feedback_from_draw(mechanism, a, u, sigma, rng.random())
