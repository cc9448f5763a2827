# ==================================================================== #
#  File name:      main.py                      #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           10-Oct-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Command line entry point.    #  |#   #   $      #|  #
#                                               #  |#   #   #      #|  #
#                                               #   #\  #   #     /#   #
#                                               #    *= #   #    =+    #
#  Rev:            1.0                          #     *++######++*     #
#                                               #        *-==-*        #
# ==================================================================== #
#  Revision history:                                                   #
#  Date        Description                                             #
#  10-Oct-2026 File created                                            #
# ==================================================================== #
#  To-Do: !=Priority, ~=Bug, ?=Idea/nice to have                       #
#                                                                      #
# ==================================================================== #

# =========== #
#   Imports   #
# =========== #
import argparse
import logging
import sys

from aoi_tools.errors import exit_code_for
from aoi_tools.cli.config import load_config
from aoi_tools.cli.presets import DEFAULT_PRESET_DIRECTORY, lPresetNames, run_preset, run_spec

# =============== #
#   Definitions   #
# =============== #
logger = logging.getLogger(__name__)

lLogLevels = ["DEBUG", "INFO", "WARNING", "ERROR"]

# =========== #
#   Methods   #
# =========== #
def build_parser():
    """
    build_parser Command line of aoi-tools

    :rtype: argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(prog="aoi-tools", description="Age of Information scheduling under a rate budget and imperfect feedback")
    parser.add_argument("--log-level", default="WARNING", choices=lLogLevels, help="logging threshold (default: WARNING)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    runParser = subparsers.add_parser("run", help="run the experiment described by a configuration file")
    runParser.add_argument("--config", required=True, help="configuration file")

    presetParser = subparsers.add_parser("preset", help="run a named study")
    presetParser.add_argument("name", choices=lPresetNames)
    presetParser.add_argument("--out", default=DEFAULT_PRESET_DIRECTORY, help="output directory (default: results)")
    presetParser.add_argument("--horizon", type=int, default=10**6, help="slots per replication (default: 1000000)")
    presetParser.add_argument("--reps", type=int, default=10, help="replications per point (default: 10)")
    presetParser.add_argument("--seed", type=int, default=0, help="seed of the first replication (default: 0)")
    presetParser.add_argument("--workers", type=int, default=1, help="worker processes (default: 1)")
    return parser

def main(argv=None):
    """
    main Entry point of the aoi-tools command

    :param argv: Arguments without the program name, defaults to sys.argv[1:]
    :type argv: list[string], optional
    :return: 0 on success, 2 on parameter, parse, validation or protocol errors, 3 on numeric errors, 1 otherwise
    :rtype: integer
    """
    arguments = build_parser().parse_args(argv)
    logging.basicConfig(level=arguments.log_level, format="%(levelname)s %(name)s: %(message)s")

    try:
        if arguments.command == "run":
            lPaths = run_spec(load_config(arguments.config))
        else:
            lPaths = run_preset(arguments.name, arguments.out, arguments.horizon, arguments.reps, arguments.seed, arguments.workers)
    except Exception as error:
        logger.error("%s", error)
        logger.debug("traceback", exc_info=True)
        return exit_code_for(error)

    for path in lPaths:
        print(path)
    return 0

if __name__ == "__main__":
    sys.exit(main())
