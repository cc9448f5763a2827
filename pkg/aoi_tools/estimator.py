# ==================================================================== #
#  File name:      estimator.py                 #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           29-Sep-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Expected destination AoI     #  |#   #   $      #|  #
#                  from delayed ACK or          #  |#   #   #      #|  #
#                  ACK/NACK feedback.           #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.1                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  18-Sep-2026 File created                                            #
#  29-Sep-2026 Added repropagation over the delay window               #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Imports   #
# =========== #
import math
from collections import deque

import numpy as np

from aoi_tools.errors import ParameterError, ProtocolError
from aoi_tools.model import INFINITE_DELAY, Mechanism

# =========== #
#   Classes   #
# =========== #
class WindowRecord:
    """
    What the access point remembers about one slot of one source
    """
    __slots__ = ("a", "w", "hhat")

    def __init__(self, a:int, w:int, hhat:float):
        self.a = a
        """ Action of the slot """
        self.w = w
        """ Local age of the slot """
        self.hhat = hhat
        """ Conditional expected AoI at the start of the slot """

    def __repr__(self):
        """
        Representation of this class when it is printed or viewed in debugger window
        """
        return f"WindowRecord(a={self.a}, w={self.w}, hhat={self.hhat!r})"

class ConditionalAgeEstimator:
    """
    Conditional expected AoI of one source at the access point.

    The oldest window record is the anchor: its hhat is the exact conditional mean for its slot given every
    feedback signal about earlier slots. Every other quantity is propagated forward from it.
    """

    def __init__(self, epsilon:float, sigma:float=1.0, delay=0, mechanism:Mechanism=Mechanism.ACKS_NACKS, fast:bool=True):
        """
        __init__ Constructor

        :param epsilon: Downlink error probability
        :type epsilon: float
        :param sigma: Feedback erasure probability, defaults to 1.0 (zero feedback)
        :type sigma: float, optional
        :param delay: Feedback delay D in slots or INFINITE_DELAY, defaults to 0
        :type delay: integer, optional
        :param mechanism: Feedback mechanism, defaults to Mechanism.ACKS_NACKS
        :type mechanism: Mechanism, optional
        :param fast: Use the constant-time correction instead of repropagating the window, defaults to True
        :type fast: boolean, optional
        """
        if not 0 <= epsilon < 1 or not 0 <= sigma <= 1:
            raise ParameterError(f"invalid estimator probabilities epsilon={epsilon}, sigma={sigma}")

        self.epsilon = epsilon
        """ Downlink error probability """
        self.sigma = sigma
        """ Feedback erasure probability """
        self.delay = delay
        """ Feedback delay D """
        self.mechanism = mechanism
        """ Feedback mechanism """
        self.fast = fast
        """ True for the constant-time update, False for repropagation """
        self.zeroFeedback = sigma >= 1 or delay == INFINITE_DELAY
        """ True when no feedback ever reaches the access point """
        self.hhat = 1.0
        """ Conditional expected AoI at the start of the current slot """
        self.lWindow = deque()
        """ Records of the slots whose feedback is still in flight, oldest first """
        self.windowTransmissions = 0
        """ Number of transmissions among the window records """

    def __repr__(self):
        """
        Representation of this class when it is printed or viewed in debugger window
        """
        return (f"ConditionalAgeEstimator(epsilon={self.epsilon}, sigma={self.sigma}, delay={self.delay}, "
                f"mechanism={self.mechanism.value}, hhat={self.hhat!r}, window={len(self.lWindow)})")

    def step(self, a:int, w:int, v:int=0):
        """
        step Close the current slot t and return the conditional expected AoI of slot t+1

        :param a: Action of slot t
        :type a: integer
        :param w: Local age of slot t
        :type w: integer
        :param v: Feedback released at the end of slot t, it describes slot t-D, defaults to 0
        :type v: integer, optional
        :raises ProtocolError: v cannot be observed
        :return: hhat of slot t+1
        :rtype: float
        """
        if self.zeroFeedback:
            if v:
                raise ProtocolError("feedback received by a source configured without feedback")
            self.hhat = zero_fb_update(self.hhat, w, a, self.epsilon)
            return self.hhat

        # Remember the slot
        self.lWindow.append(WindowRecord(a, w, self.hhat))
        self.windowTransmissions += a

        # Warm-up, the feedback describes a slot before 0
        if len(self.lWindow) <= self.delay:
            if v:
                raise ProtocolError("feedback received about a slot before the start of the run")
            self.hhat = zero_fb_update(self.hhat, w, a, self.epsilon)
            return self.hhat

        # Correct the oldest slot with its feedback
        oldest = self.lWindow.popleft()
        self.windowTransmissions -= oldest.a
        corrected = delayed_update(self.mechanism, oldest.hhat, oldest.w, oldest.a, v, self.epsilon, self.sigma)

        # Carry forward
        if self.fast:
            self.hhat = self._fast_update(oldest, corrected, a, w)
        else:
            self.hhat = repropagate(self.lWindow, corrected, self.epsilon)

        # New anchor
        if self.lWindow:
            self.lWindow[0].hhat = corrected
        return self.hhat

    def _fast_update(self, oldest:WindowRecord, corrected:float, a:int, w:int):
        # Without delay the correction is the next value itself
        if not self.lWindow:
            return corrected

        epsilon = self.epsilon
        stale = zero_fb_update(oldest.hhat, oldest.w, oldest.a, epsilon)
        # Transmissions strictly between the anchor and the current slot
        factor = epsilon ** (self.windowTransmissions - a)
        return (1 - a * (1 - epsilon)) * (self.hhat + factor * (corrected - stale) - w) + w + 1

# =========== #
#   Methods   #
# =========== #
def zero_fb_update(hhat:float, w:int, a:int, epsilon:float):
    """
    zero_fb_update Conditional expected AoI of the next slot when nothing is learned about the current one

    :param hhat: Current conditional expected AoI
    :type hhat: float
    :param w: Current local age
    :type w: integer
    :param a: Current action
    :type a: integer
    :param epsilon: Downlink error probability
    :type epsilon: float
    :return: e(hhat+1) + (1-e)(w+1) after a transmission, hhat+1 otherwise
    :rtype: float
    """
    if a:
        return epsilon * (hhat + 1) + (1 - epsilon) * (w + 1)
    return hhat + 1

def ack_delayed_update(hhat:float, w:int, a:int, v:int, epsilon:float, sigma:float):
    """
    ack_delayed_update Correct the estimate of the slot after a transmission slot once its ACK feedback is known

    :param hhat: Conditional expected AoI of the described slot
    :type hhat: float
    :param w: Local age of the described slot
    :type w: integer
    :param a: Action of the described slot
    :type a: integer
    :param v: Feedback, 0 or +1
    :type v: integer
    :param epsilon: Downlink error probability
    :type epsilon: float
    :param sigma: Feedback erasure probability
    :type sigma: float
    :raises ProtocolError: v=-1 under ACKs, v!=0 without transmission, or an impossible silence
    :rtype: float
    """
    if v == -1:
        raise ProtocolError("the ACKs mechanism never sends a NACK")
    if not a:
        if v:
            raise ProtocolError("feedback received about a slot without transmission")
        return hhat + 1
    if v == 1:
        return w + 1

    silence = 1 - (1 - epsilon) * (1 - sigma)
    if silence <= 0:
        raise ProtocolError("a missing ACK is impossible with epsilon=0 and sigma=0")
    return (epsilon * (hhat + 1) + (1 - epsilon) * sigma * (w + 1)) / silence

def acknack_delayed_update(hhat:float, w:int, a:int, v:int, epsilon:float):
    """
    acknack_delayed_update Correct the estimate of the slot after a transmission slot once its ACK/NACK feedback is known.
    The result does not depend on the feedback erasure probability.

    :param hhat: Conditional expected AoI of the described slot
    :type hhat: float
    :param w: Local age of the described slot
    :type w: integer
    :param a: Action of the described slot
    :type a: integer
    :param v: Feedback, -1, 0 or +1
    :type v: integer
    :param epsilon: Downlink error probability
    :type epsilon: float
    :raises ProtocolError: v!=0 without transmission
    :rtype: float
    """
    if not a:
        if v:
            raise ProtocolError("feedback received about a slot without transmission")
        return hhat + 1
    if v == 1:
        return w + 1
    if v == -1:
        return hhat + 1
    return zero_fb_update(hhat, w, a, epsilon)

def delayed_update(mechanism:Mechanism, hhat:float, w:int, a:int, v:int, epsilon:float, sigma:float):
    """ Dispatch to the delayed update of the mechanism """
    if mechanism is Mechanism.ACKS:
        return ack_delayed_update(hhat, w, a, v, epsilon, sigma)
    return acknack_delayed_update(hhat, w, a, v, epsilon)

def repropagate(lRecords, corrected:float, epsilon:float):
    """
    repropagate Carry a corrected estimate forward through slots whose feedback has not arrived yet.
    The records' hhat values are refreshed on the way.

    :param lRecords: Records of the slots following the corrected one, oldest first
    :type lRecords: iterable[WindowRecord]
    :param corrected: Corrected conditional expected AoI of the first record's slot
    :type corrected: float
    :param epsilon: Downlink error probability
    :type epsilon: float
    :return: Conditional expected AoI of the slot after the last record
    :rtype: float
    """
    hhat = corrected
    for record in lRecords:
        record.hhat = hhat
        hhat = zero_fb_update(hhat, record.w, record.a, epsilon)
    return hhat

def transition_probability(hNext:int, h:int, w:int, a:int, epsilon:float):
    """
    transition_probability Probability that the AoI moves from h to hNext

    :rtype: float
    """
    if a:
        probability = 0.0
        if hNext == h + 1:
            probability += epsilon
        if hNext == w + 1:
            probability += 1 - epsilon
        return probability
    return 1.0 if hNext == h + 1 else 0.0

def observation_probability(mechanism:Mechanism, v:int, hNext:int, h:int, w:int, a:int, epsilon:float, sigma:float):
    """
    observation_probability Likelihood of the feedback v given the AoI transition h -> hNext.
    Meant for supports where h+1 and w+1 differ, so that hNext identifies the channel outcome.

    :param mechanism: Feedback mechanism
    :type mechanism: Mechanism
    :param v: Feedback value
    :type v: integer
    :param hNext: AoI of the next slot
    :type hNext: integer
    :param h: AoI of the described slot
    :type h: integer
    :param w: Local age of the described slot
    :type w: integer
    :param a: Action of the described slot
    :type a: integer
    :param epsilon: Downlink error probability, only there to keep the signature of the transition
    :type epsilon: float
    :param sigma: Feedback erasure probability
    :type sigma: float
    :rtype: float
    """
    if not a:
        return 1.0 if v == 0 and hNext == h + 1 else 0.0

    if mechanism is Mechanism.ACKS:
        if hNext == h + 1:
            return 1.0 if v == 0 else 0.0
        if hNext == w + 1:
            return {0: sigma, 1: 1 - sigma}.get(v, 0.0)
        return 0.0

    if v == 0 and hNext in (h + 1, w + 1):
        return sigma
    if v == -1 and hNext == h + 1:
        return 1 - sigma
    if v == 1 and hNext == w + 1:
        return 1 - sigma
    return 0.0

def bayes_posterior_mean(support, belief, w:int, a:int, v:int, mechanism:Mechanism, epsilon:float, sigma:float):
    """
    bayes_posterior_mean Posterior mean of the next AoI computed from an explicit belief, a reference for the closed forms

    :param support: AoI values carrying probability, each larger than w
    :type support: sequence[int]
    :param belief: Probability of each support value
    :type belief: sequence[float]
    :param w: Local age of the described slot
    :type w: integer
    :param a: Action of the described slot
    :type a: integer
    :param v: Observed feedback
    :type v: integer
    :param mechanism: Feedback mechanism
    :type mechanism: Mechanism
    :param epsilon: Downlink error probability
    :type epsilon: float
    :param sigma: Feedback erasure probability
    :type sigma: float
    :raises ProtocolError: The observation has zero likelihood under the belief
    :rtype: float
    """
    support = np.asarray(support, dtype=int)
    belief = np.asarray(belief, dtype=float)
    if np.any(support <= w):
        raise ParameterError("the support must lie above the local age")

    lWeights, lValues = [], []
    for h, probability in zip(support.tolist(), belief.tolist()):
        for hNext in (h + 1, w + 1):
            weight = probability * transition_probability(hNext, h, w, a, epsilon) * observation_probability(mechanism, v, hNext, h, w, a, epsilon, sigma)
            if weight > 0:
                lWeights.append(weight)
                lValues.append(hNext)

    evidence = math.fsum(lWeights)
    if evidence <= 0:
        raise ProtocolError("the observation has zero likelihood")
    return math.fsum(weight * value for weight, value in zip(lWeights, lValues)) / evidence
