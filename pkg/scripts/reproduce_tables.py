# ==================================================================== #
#  File name:      reproduce_tables.py          #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           12-Oct-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Runs every experiment        #  |#   #   $      #|  #
#                  preset into ./results/.      #  |#   #   #      #|  #
#                                               #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.0                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  12-Oct-2026 File created                                            #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

import argparse, logging, sys
from _directory import *

sys.path.insert(0, MAIN_DIRECTORY)
from aoi_tools.cli.presets import lPresetNames, run_preset

def main():
    parser = argparse.ArgumentParser(description="Run every experiment preset and write the results")
    parser.add_argument("--out", default=RESULTS_DIRECTORY)
    parser.add_argument("--horizon", type=int, default=10**6)
    parser.add_argument("--reps", type=int, default=10)
    parser.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    arguments = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    for name in lPresetNames:
        for path in run_preset(name, arguments.out, arguments.horizon, arguments.reps, workers=arguments.workers):
            print(path)
    print("Done!")

if __name__ == "__main__":
    main()
