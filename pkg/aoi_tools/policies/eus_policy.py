# ==================================================================== #
#  File name:      eus_policy.py                #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           25-Sep-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Policy following an exact    #  |#   #   $      #|  #
#                  uniform schedule.            #  |#   #   #      #|  #
#                                               #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.0                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  25-Sep-2026 File created                                            #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Imports   #
# =========== #
from aoi_tools.errors import ValidationError
from aoi_tools.eus import CyclicSchedule, check_eus_condition
from aoi_tools.policies.policy import IDLE, Decision, Policy

# =========== #
#   Classes   #
# =========== #
class EusPolicy(Policy):
    """
    Plays an exact uniform schedule, blind to the state
    """
    name = "eus"

    def __init__(self, schedule:CyclicSchedule):
        """
        __init__ Constructor

        :param schedule: Collision-free cyclic schedule
        :type schedule: CyclicSchedule
        :raises ValidationError: The schedule has colliding sources
        """
        if not check_eus_condition(schedule.offsets, schedule.periods):
            raise ValidationError(f"schedule {schedule} has colliding sources")
        self.schedule = schedule
        """ Offsets and periods """

    def __repr__(self):
        """
        Representation of this class when it is printed or viewed in debugger window
        """
        return f"EusPolicy(offsets={self.schedule.offsets}, periods={self.schedule.periods})"

    def decide(self, t:int, lW:list=None, lHhat:list=None):
        return eus_decide(self.schedule, t)

# =========== #
#   Methods   #
# =========== #
def eus_decide(schedule:CyclicSchedule, t:int):
    """
    eus_decide Source whose offset is congruent to t modulo its period

    :param schedule: Admissible schedule
    :type schedule: CyclicSchedule
    :param t: Slot index
    :type t: integer
    :rtype: Decision
    """
    for n, (offset, period) in enumerate(zip(schedule.offsets, schedule.periods), start=1):
        if t >= offset and (t - offset) % period == 0:
            return Decision(n)
    return IDLE
