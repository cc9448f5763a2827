# ==================================================================== #
#  File name:      presets.py                   #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           10-Oct-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Preset networks and the      #  |#   #   $      #|  #
#                  experiment runners.          #  |#   #   #      #|  #
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
import logging
import pathlib
from dataclasses import replace

from aoi_tools.bounds import BoundInputs, perfect_fb_lb, rate_split, zero_fb_lb
from aoi_tools.errors import ParameterError, ValidationError
from aoi_tools.eus import design_eus
from aoi_tools.model import Mechanism, NetworkConfig, SourceParams, normalize_sources
from aoi_tools.sim import dAxisDirections, ordering_check, run_experiment
from aoi_tools.tools import POLICY_DPP, POLICY_EUS, POLICY_RANDOMIZED, POLICY_ROUND_ROBIN
from aoi_tools.cli.report import UNAVAILABLE, ReportRow, emit_csv, format_table

# =============== #
#   Definitions   #
# =============== #
logger = logging.getLogger(__name__)

PRESET_GAW_TABLE = "gaw-table"
PRESET_BERNOULLI_IMPERFECT = "bernoulli-imperfect"
PRESET_PRIORITY_SWEEP = "priority-sweep"
PRESET_ASYMMETRIC = "asymmetric"

lPresetNames = [PRESET_GAW_TABLE, PRESET_BERNOULLI_IMPERFECT, PRESET_PRIORITY_SWEEP, PRESET_ASYMMETRIC]
""" Every preset accepted by run_preset """

DEFAULT_PRESET_DIRECTORY = "results"
DEFAULT_CSV_OUTPUT = "results.csv"

# Zero-feedback GAW table network
GAW_TABLE_WEIGHTS = (1, 4, 9, 36)
GAW_TABLE_EPSILON = 0.1
lGawTableRhos = [0.1, 1 / 6, 0.2, 0.25, 0.3, 0.5, 0.8, 1.0]

dPublishedReference = {
    "cyclic": (18.72, 11.42, 9.58, 7.79, 6.56, 4.13, 2.83, 2.40),
    "lagrange-greedy": (22.34, 13.58, 11.40, 9.25, 7.88, 4.87, 3.02, 2.68),
}
""" Published EWSAoI of the external baselines on the GAW table, aligned with lGawTableRhos. Not simulated here """

# Grouped Bernoulli networks
GROUP_COUNT = 4
GROUP_PRIORITIES = (1, 4, 7, 10)
GROUPED_SIZE = 12

ltImperfectPolicies = [
    ("dpp-acks", POLICY_DPP, Mechanism.ACKS),
    ("dpp-acknacks", POLICY_DPP, Mechanism.ACKS_NACKS),
    ("randomized", POLICY_RANDOMIZED, Mechanism.ACKS_NACKS),
    ("round-robin", POLICY_ROUND_ROBIN, Mechanism.ACKS_NACKS),
]
""" (label, policy, mechanism) simulated at every point of the imperfect-feedback presets """

# =========== #
#   Methods   #
# =========== #
def gaw_table_config(rho:float, horizon:int=10**6, seed:int=0):
    """
    gaw_table_config Zero-feedback GAW network of the reference table: N=4, epsilon=0.1, alpha proportional to (1, 4, 9, 36)

    :param rho: Rate budget
    :type rho: float
    :rtype: NetworkConfig
    """
    total = sum(GAW_TABLE_WEIGHTS)
    lSources = [
        SourceParams(index, 1.0, GAW_TABLE_EPSILON, sigma=1.0, alpha=weight / total)
        for index, weight in enumerate(GAW_TABLE_WEIGHTS, start=1)
    ]
    return NetworkConfig(normalize_sources(lSources)[0], rho, horizon=horizon, seed=seed)

def grouped_config(size:int=GROUPED_SIZE, priorities=GROUP_PRIORITIES, rho:float=0.5, lam=0.5, epsilon=0.2, sigma=0.2, delay=10, horizon:int=10**6, seed:int=0):
    """
    grouped_config Network of size sources split into four equally sized priority groups.
    lam, epsilon, sigma and delay are either one value for every source or a callable of the source index n and size.

    :param size: Number of sources, a multiple of four, defaults to 12
    :type size: integer, optional
    :param priorities: Priority of each group, defaults to 1:4:7:10
    :type priorities: tuple, optional
    :rtype: NetworkConfig
    """
    if size % GROUP_COUNT != 0:
        raise ParameterError(f"grouped networks need a multiple of {GROUP_COUNT} sources, got {size}")

    def value(parameter, n):
        return parameter(n, size) if callable(parameter) else parameter

    lSources = [
        SourceParams(
            n,
            value(lam, n),
            value(epsilon, n),
            sigma=value(sigma, n),
            delay=value(delay, n),
            alpha=priorities[(n - 1) * GROUP_COUNT // size],
        )
        for n in range(1, size + 1)
    ]
    return NetworkConfig(normalize_sources(lSources)[0], rho, horizon=horizon, seed=seed)

def apply_sweep_value(config:NetworkConfig, parameter:str, value):
    """
    apply_sweep_value Copy of a network with one parameter changed, source parameters change on every source

    :param config: Base network
    :type config: NetworkConfig
    :param parameter: One of rho, epsilon, sigma, delay, lambda
    :type parameter: string
    :param value: New value
    :type value: float or integer
    :raises ParameterError: Unknown parameter or out-of-range value
    :rtype: NetworkConfig
    """
    if parameter == "rho":
        return replace(config, rho=value)
    dFields = {"epsilon": "epsilon", "sigma": "sigma", "delay": "delay", "lambda": "lam"}
    if parameter not in dFields:
        raise ParameterError(f"cannot sweep {parameter!r}")
    return replace(config, sources=tuple(replace(source, **{dFields[parameter]: value}) for source in config.sources))

def _sweep(lPoints:list, ltPolicies:list, replications:int, workers:int, suffix:str=""):
    """ Simulate every (label, policy, mechanism) at every (value, config) point """
    lRows, dReports = list(), dict()
    for value, config in lPoints:
        for label, policy, mechanism in ltPolicies:
            logger.info("%s%s at %s", label, suffix, value)
            report = run_experiment(config, policy, replications, mechanism=mechanism, workers=workers)
            lRows.append(ReportRow.from_report(value, label + suffix, report))
            dReports.setdefault(label + suffix, list()).append(report)
    return lRows, dReports

def _ordering_lines(parameter:str, dReports:dict):
    if parameter not in dAxisDirections:
        return []
    lLines = list()
    for label, lReports in dReports.items():
        verdict = ordering_check(lReports, parameter)
        lLines.append(f"{parameter} sweep, {label}: {verdict.direction}, monotone={verdict.monotone}, strict={verdict.strict}")
        if not verdict.monotone:
            logger.warning("%s sweep of %s moves against the expected direction at steps %s", parameter, label, verdict.lViolations)
    return lLines

def _feedback_ordering_lines(parameter:str, dReports:dict, suffix:str=""):
    """ Points where ACKs/NACKs is not better than ACKs beyond two pooled standard errors """
    lAcks, lAckNacks = dReports.get("dpp-acks" + suffix, []), dReports.get("dpp-acknacks" + suffix, [])
    worse = sum(1 for acks, ackNacks in zip(lAcks, lAckNacks) if ackNacks.ewsaoi - acks.ewsaoi > 2 * (acks.ewsaoiStderr ** 2 + ackNacks.ewsaoiStderr ** 2) ** 0.5)
    return [f"{parameter} sweep{suffix}: dpp-acknacks worse than dpp-acks at {worse} of {len(lAcks)} points"]

def run_gaw_table(outDir:pathlib.Path, horizon:int, replications:int, seed:int, workers:int):
    """
    run_gaw_table Bounds, exact uniform schedules and DPP on the zero-feedback GAW table

    :return: Written files
    :rtype: list[pathlib.Path]
    """
    lRows, llTable = list(), list()
    for position, rho in enumerate(lGawTableRhos):
        config = gaw_table_config(rho, horizon, seed)
        inputs = BoundInputs.from_config(config)
        perfect, zero = perfect_fb_lb(inputs), zero_fb_lb(inputs)

        if design_eus(rate_split(inputs).rates) is None:
            logger.warning("rho=%.4g: no EUS constructed", rho)
            lRows.append(ReportRow.unavailable(rho, POLICY_EUS, zero, None))
            eusAnalytic, eusSimulated = UNAVAILABLE, UNAVAILABLE
        else:
            eusReport = run_experiment(config, POLICY_EUS, replications, workers=workers)
            lRows.append(ReportRow.from_report(rho, POLICY_EUS, eusReport))
            eusAnalytic, eusSimulated = eusReport.boundUpper, eusReport.ewsaoi

        dppReport = run_experiment(config, POLICY_DPP, replications, workers=workers)
        lRows.append(ReportRow.from_report(rho, POLICY_DPP, dppReport))
        llTable.append([
            rho, perfect, zero, eusAnalytic, eusSimulated, dppReport.ewsaoi,
            dPublishedReference["cyclic"][position], dPublishedReference["lagrange-greedy"][position],
        ])

    csvPath, tablePath = outDir / "gaw_table.csv", outDir / "gaw_table.txt"
    emit_csv(lRows, csvPath)
    lHeader = [
        "rho", "perfect fb LB", "zero fb LB", "EUS analytic", "EUS simulated", "DPP simulated",
        "cyclic (published, not simulated)", "Lagrange greedy (published, not simulated)",
    ]
    tablePath.write_text(format_table(lHeader, llTable))
    logger.info("wrote %s", tablePath)
    return [csvPath, tablePath]

def run_bernoulli_imperfect(outDir:pathlib.Path, horizon:int, replications:int, seed:int, workers:int):
    """
    run_bernoulli_imperfect Delay, erasure, rate budget and traffic sweeps of the grouped Bernoulli network

    :return: Written files
    :rtype: list[pathlib.Path]
    """
    ltSweeps = [
        # (parameter, values, fixed parameters, epsilons)
        ("delay", [0, 2, 4, 6, 8, 10], dict(sigma=0.3, rho=0.5), (0.2, 0.5)),
        ("sigma", [0.0, 0.2, 0.4, 0.6, 0.8, 1.0], dict(delay=10, rho=0.5), (0.2,)),
        ("rho", [0.2, 0.4, 0.6, 0.8, 1.0], dict(delay=10, sigma=0.2), (0.2, 0.5)),
        ("lambda", [0.1, 0.3, 0.5, 0.7, 0.9], dict(delay=10, sigma=0.2, rho=0.5), (0.2,)),
    ]
    lPaths, lSummary = list(), list()
    for parameter, lValues, dFixed, tEpsilons in ltSweeps:
        lRows = list()
        for epsilon in tEpsilons:
            base = grouped_config(epsilon=epsilon, horizon=horizon, seed=seed, **dFixed)
            lPoints = [(value, apply_sweep_value(base, parameter, value)) for value in lValues]
            suffix = f" eps={epsilon:g}" if len(tEpsilons) > 1 else ""
            lSweepRows, dReports = _sweep(lPoints, ltImperfectPolicies, replications, workers, suffix)
            lRows.extend(lSweepRows)
            lSummary.extend(_ordering_lines(parameter, dReports))
            lSummary.extend(_feedback_ordering_lines(parameter, dReports, suffix))
        path = outDir / f"bernoulli_{parameter}.csv"
        emit_csv(lRows, path)
        lPaths.append(path)

    summaryPath = outDir / "bernoulli_summary.txt"
    summaryPath.write_text("\n".join(lSummary) + "\n")
    lPaths.append(summaryPath)
    return lPaths

def run_priority_sweep(outDir:pathlib.Path, horizon:int, replications:int, seed:int, workers:int):
    """
    run_priority_sweep Arithmetic (1 : 1+r : 1+2r : 1+3r) and geometric (1 : r : r^2 : r^3) group priorities

    :return: Written files
    :rtype: list[pathlib.Path]
    """
    dProgressions = {
        "arithmetic": ([0, 1, 2, 3, 4, 5], lambda r: (1, 1 + r, 1 + 2 * r, 1 + 3 * r)),
        "geometric": ([1, 1.5, 2, 2.5, 3], lambda r: (1, r, r ** 2, r ** 3)),
    }
    lPaths = list()
    for name, (lRatios, priorities_of) in dProgressions.items():
        lPoints = [(ratio, grouped_config(priorities=priorities_of(ratio), horizon=horizon, seed=seed)) for ratio in lRatios]
        lRows, _ = _sweep(lPoints, ltImperfectPolicies, replications, workers)
        path = outDir / f"priority_{name}.csv"
        emit_csv(lRows, path)
        lPaths.append(path)
    return lPaths

def run_asymmetric(outDir:pathlib.Path, horizon:int, replications:int, seed:int, workers:int):
    """
    run_asymmetric Networks whose sources differ in traffic, erasure, channel quality and delay

    :return: Written files
    :rtype: list[pathlib.Path]
    """
    def decreasing(n, size):
        return (size - n + 1) / (2 * size)

    def increasing(n, size):
        return (n - 1) / (2 * size)

    def half_delay(n, size):
        return 5 if n <= size // 2 else 10

    base = grouped_config(lam=decreasing, sigma=increasing, epsilon=0.2, delay=10, horizon=horizon, seed=seed)
    lRhoPoints = [(rho, apply_sweep_value(base, "rho", rho)) for rho in (0.2, 0.4, 0.6, 0.8, 1.0)]
    lRhoRows, dReports = _sweep(lRhoPoints, ltImperfectPolicies, replications, workers)
    lSummary = _ordering_lines("rho", dReports)

    lSizePoints = [
        (size, grouped_config(size=size, lam=0.5, sigma=0.2, epsilon=decreasing, delay=half_delay, rho=0.5, horizon=horizon, seed=seed))
        for size in (4, 8, 12, 16, 20)
    ]
    lSizeRows, _ = _sweep(lSizePoints, ltImperfectPolicies, replications, workers)

    lPaths = [outDir / "asymmetric_rho.csv", outDir / "asymmetric_size.csv", outDir / "asymmetric_summary.txt"]
    emit_csv(lRhoRows, lPaths[0])
    emit_csv(lSizeRows, lPaths[1])
    lPaths[2].write_text("\n".join(lSummary) + "\n")
    return lPaths

dPresets = {
    PRESET_GAW_TABLE: run_gaw_table,
    PRESET_BERNOULLI_IMPERFECT: run_bernoulli_imperfect,
    PRESET_PRIORITY_SWEEP: run_priority_sweep,
    PRESET_ASYMMETRIC: run_asymmetric,
}

def run_preset(name:str, outDir=DEFAULT_PRESET_DIRECTORY, horizon:int=10**6, replications:int=10, seed:int=0, workers:int=1):
    """
    run_preset Run a named study and write its report files

    :param name: One of lPresetNames
    :type name: string
    :param outDir: Directory receiving the reports, created when missing, defaults to "results"
    :type outDir: str or pathlib.Path, optional
    :param horizon: Slots per replication, defaults to 10**6
    :type horizon: integer, optional
    :param replications: Replications per point, defaults to 10
    :type replications: integer, optional
    :param seed: Seed of the first replication, defaults to 0
    :type seed: integer, optional
    :param workers: Worker processes, defaults to 1
    :type workers: integer, optional
    :raises ParameterError: Unknown preset name
    :return: Written files
    :rtype: list[pathlib.Path]
    """
    if name not in dPresets:
        raise ParameterError(f"unknown preset {name!r}, expected one of {', '.join(lPresetNames)}")
    outDir = pathlib.Path(outDir)
    outDir.mkdir(parents=True, exist_ok=True)
    logger.info("preset %s: horizon=%d replications=%d seed=%d into %s", name, horizon, replications, seed, outDir)
    return dPresets[name](outDir, horizon, replications, seed, workers)

def run_spec(spec):
    """
    run_spec Run a parsed experiment description: its preset, or its policy on every sweep point

    :param spec: Parsed configuration
    :type spec: aoi_tools.cli.config.ExperimentSpec
    :return: Written files
    :rtype: list[pathlib.Path]
    """
    if spec.preset is not None:
        return run_preset(spec.preset, spec.output or DEFAULT_PRESET_DIRECTORY, spec.horizon, spec.replications, spec.seed, spec.workers)

    if spec.sweepParameter is None:
        lPoints = [(None, spec.config)]
    else:
        lPoints = [(value, apply_sweep_value(spec.config, spec.sweepParameter, value)) for value in spec.sweepValues]

    lRows, lReports = list(), list()
    for value, config in lPoints:
        try:
            report = run_experiment(config, spec.policy, spec.replications, V=spec.V, workers=spec.workers)
        except ValidationError:
            if spec.policy != POLICY_EUS or spec.sweepParameter is None:
                raise
            logger.warning("%s=%s: no EUS constructed", spec.sweepParameter, value)
            lRows.append(ReportRow.unavailable(value, spec.policy))
            continue
        lRows.append(ReportRow.from_report(value, spec.policy, report))
        lReports.append(report)

    if spec.sweepParameter in dAxisDirections and len(lReports) == len(lPoints):
        for line in _ordering_lines(spec.sweepParameter, {spec.policy: lReports}):
            logger.info(line)

    path = pathlib.Path(spec.output or DEFAULT_CSV_OUTPUT)
    emit_csv(lRows, path)
    return [path]
