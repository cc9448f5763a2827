# ==================================================================== #
#  File name:      streams.py                   #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           15-Sep-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Seeded random streams, one   #  |#   #   $      #|  #
#                  per source and quantity.     #  |#   #   #      #|  #
#                                               #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.0                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  15-Sep-2026 File created                                            #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Imports   #
# =========== #
import numpy as np

# =============== #
#   Definitions   #
# =============== #
PURPOSE_GENERATION = "generation"
PURPOSE_CHANNEL = "channel"
PURPOSE_FEEDBACK = "feedback"
PURPOSE_POLICY = "policy"

dPurposeCodes = {
    PURPOSE_GENERATION: 0,
    PURPOSE_CHANNEL: 1,
    PURPOSE_FEEDBACK: 2,
    PURPOSE_POLICY: 3,
}
""" Entropy word of each purpose, part of every stream's seed sequence """

BLOCK_SLOTS = 65536
""" Slots drawn per block """

# =========== #
#   Classes   #
# =========== #
class SlotStream:
    """
    Uniform draws indexed by slot. Slot t of a stream always receives the same draw,
    whatever policy consumes it, which gives common random numbers across policies.
    """

    def __init__(self, seed:int, source:int, purpose:str, blockSlots:int=BLOCK_SLOTS):
        """
        __init__ Constructor

        :param seed: Replication seed
        :type seed: integer
        :param source: Source index, 0 for network-wide streams
        :type source: integer
        :param purpose: One of the PURPOSE_* definitions
        :type purpose: string
        :param blockSlots: Draws generated at once, defaults to BLOCK_SLOTS
        :type blockSlots: integer, optional
        """
        self.seed = seed
        """ Replication seed """
        self.source = source
        """ Source index the stream belongs to """
        self.purpose = purpose
        """ What the draws are used for """
        self.blockSlots = blockSlots
        """ Draws per block """
        self.generator = np.random.default_rng(np.random.SeedSequence([seed, source, dPurposeCodes[purpose]]))
        """ Underlying numpy generator """
        self.blockStart = 0
        """ First slot of the current block """
        self.aBlock = self.generator.random(blockSlots)
        """ Draws of the current block """

    def __repr__(self):
        """
        Representation of this class when it is printed or viewed in debugger window
        """
        return f"SlotStream(seed={self.seed}, source={self.source}, purpose={self.purpose!r}, blockStart={self.blockStart})"

    def block(self, start:int):
        """
        block Draws of the block starting at a slot, blocks must be requested in order

        :param start: First slot of the block, a multiple of blockSlots
        :type start: integer
        :return: The block's uniform draws
        :rtype: numpy.ndarray[float]
        """
        while self.blockStart < start:
            self.blockStart += self.blockSlots
            self.aBlock = self.generator.random(self.blockSlots)
        return self.aBlock

    def at(self, t:int):
        """
        at Draw of one slot, slots must be requested in non-decreasing block order

        :param t: Slot index
        :type t: integer
        :return: Uniform draw in [0, 1)
        :rtype: float
        """
        return float(self.block(t - t % self.blockSlots)[t % self.blockSlots])

class ReplicationStreams:
    """
    All random streams of one replication, one per (source, purpose) plus the policy stream
    """

    def __init__(self, seed:int, size:int, blockSlots:int=BLOCK_SLOTS):
        """
        __init__ Constructor

        :param seed: Replication seed
        :type seed: integer
        :param size: Number of sources N
        :type size: integer
        :param blockSlots: Draws generated at once, defaults to BLOCK_SLOTS
        :type blockSlots: integer, optional
        """
        self.seed = seed
        """ Replication seed """
        self.lGeneration = [SlotStream(seed, n, PURPOSE_GENERATION, blockSlots) for n in range(1, size + 1)]
        """ Packet generation streams, one per source """
        self.lChannel = [SlotStream(seed, n, PURPOSE_CHANNEL, blockSlots) for n in range(1, size + 1)]
        """ Downlink outcome streams, one per source """
        self.lFeedback = [SlotStream(seed, n, PURPOSE_FEEDBACK, blockSlots) for n in range(1, size + 1)]
        """ Feedback erasure streams, one per source """
        self.policy = SlotStream(seed, 0, PURPOSE_POLICY, blockSlots)
        """ Stream of the randomized policy """

    def __repr__(self):
        """
        Representation of this class when it is printed or viewed in debugger window
        """
        return f"ReplicationStreams(seed={self.seed}, N={len(self.lGeneration)})"
