# ==================================================================== #
#  File name:      report.py                    #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           09-Oct-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Result rows, CSV output and  #  |#   #   $      #|  #
#                  text tables.                 #  |#   #   #      #|  #
#                                               #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.0                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  09-Oct-2026 File created                                            #
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
from dataclasses import dataclass

from aoi_tools.sim import SimReport

# =============== #
#   Definitions   #
# =============== #
logger = logging.getLogger(__name__)

CSV_HEADER = ["sweep_value", "policy", "ewsaoi_mean", "ewsaoi_stderr", "rate", "q_over_t", "bound_lower", "bound_upper"]
UNAVAILABLE = "--"
""" Written where a policy cannot run, e.g. no exact uniform schedule exists """

# =========== #
#   Classes   #
# =========== #
@dataclass(frozen=True)
class ReportRow:
    """
    One line of a results file: a policy at one point of a sweep
    """
    sweepValue: object
    """ Value of the swept parameter, None for a single point """
    policy: str
    """ Label of the policy """
    ewsaoiMean: object
    ewsaoiStderr: object
    rate: object
    qOverT: object
    boundLower: object = None
    boundUpper: object = None

    @classmethod
    def from_report(cls, sweepValue, label:str, report:SimReport):
        """
        from_report Row of an aggregated simulation

        :param sweepValue: Value of the swept parameter
        :type sweepValue: float
        :param label: Policy label written in the file
        :type label: string
        :param report: Aggregated replications
        :type report: SimReport
        :rtype: ReportRow
        """
        return cls(sweepValue, label, report.ewsaoi, report.ewsaoiStderr, report.rate, report.qOverT, report.boundLower, report.boundUpper)

    @classmethod
    def unavailable(cls, sweepValue, label:str, boundLower:float=None, boundUpper:float=None):
        """ Row of a policy that could not run at this point """
        return cls(sweepValue, label, UNAVAILABLE, UNAVAILABLE, UNAVAILABLE, UNAVAILABLE, boundLower, boundUpper)

    def cells(self):
        """ Formatted cells in CSV_HEADER order """
        return [format_cell(value) for value in (self.sweepValue, self.policy, self.ewsaoiMean, self.ewsaoiStderr, self.rate, self.qOverT, self.boundLower, self.boundUpper)]

# =========== #
#   Methods   #
# =========== #
def format_cell(value):
    """
    format_cell Text of a CSV cell, numbers use 6 significant digits

    :rtype: string
    """
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return f"{value:.6g}"

def emit_csv(lRows:list, path):
    """
    emit_csv Write report rows in the given order under a header line

    :param lRows: Rows to write
    :type lRows: list[ReportRow]
    :param path: Destination file
    :type path: str or pathlib.Path
    """
    with open(path, "w", newline="") as csvFile:
        writer = csv.writer(csvFile)
        writer.writerow(CSV_HEADER)
        for row in lRows:
            writer.writerow(row.cells())
    logger.info("wrote %d rows to %s", len(lRows), path)

def format_table(lHeader:list, llRows:list):
    """
    format_table Plain text table with right-aligned columns

    :param lHeader: Column titles
    :type lHeader: list[string]
    :param llRows: Cells of each row, numbers are formatted with 4 significant digits
    :type llRows: list[list]
    :rtype: string
    """
    llCells = [list(lHeader)]
    for lRow in llRows:
        llCells.append([cell if isinstance(cell, str) else ("" if cell is None else f"{cell:.4g}") for cell in lRow])
    lWidths = [max(len(lCells[column]) for lCells in llCells) for column in range(len(lHeader))]
    lLines = ["  ".join(cell.rjust(width) for cell, width in zip(lCells, lWidths)) for lCells in llCells]
    lLines.insert(1, "  ".join("-" * width for width in lWidths))
    return "\n".join(lLines) + "\n"
