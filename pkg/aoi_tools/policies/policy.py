# ==================================================================== #
#  File name:      policy.py                    #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           24-Sep-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Decisions and the base       #  |#   #   $      #|  #
#                  class of the scheduling      #  |#   #   #      #|  #
#                  policies.                    #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.0                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  24-Sep-2026 File created                                            #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Imports   #
# =========== #
from dataclasses import dataclass

# =========== #
#   Classes   #
# =========== #
@dataclass(frozen=True)
class Decision:
    """
    Outcome of a scheduling decision, at most one source per slot
    """
    scheduled: int = None
    """ Index of the scheduled source, None when the channel stays idle """

    @property
    def total_actions(self):
        """ Number of transmissions in the slot, 0 or 1 """
        return 0 if self.scheduled is None else 1

IDLE = Decision()
""" Decision to leave the channel idle """

class Policy:
    """
    Common interface of the scheduling policies. decide is called once per slot, update once the slot is closed.
    """
    name = "policy"
    """ Name used in reports """

    def decide(self, t:int, lW:list, lHhat:list):
        """
        decide Choose the source to schedule in slot t

        :param t: Slot index
        :type t: integer
        :param lW: Local age of every source
        :type lW: list[integer]
        :param lHhat: Conditional expected AoI of every source
        :type lHhat: list[float]
        :rtype: Decision
        """
        raise NotImplementedError

    def update(self, totalActions:int):
        """
        update Account for the transmissions of the closed slot

        :param totalActions: Number of transmissions in the slot
        :type totalActions: integer
        """
