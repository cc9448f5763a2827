# ==================================================================== #
#  File name:      config.py                    #        _.==._        #
#  Author:         AoI Tools Team               #     .+=##**##=+.     #
#  Date:           09-Oct-2026                  #    *= #        =*    #
# ============================================= #   #/  #         \#   #
#  Description:    Experiment files, parsing    #  |#   #   $      #|  #
#                  and serializing.             #  |#   #   #      #|  #
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
import logging
import math
from dataclasses import dataclass, field

from aoi_tools.errors import ConfigParseError, ParameterError
from aoi_tools.model import INFINITE_DELAY, Mechanism, NetworkConfig, SourceParams, normalize_sources
from aoi_tools.tools import POLICY_DPP, lPolicyNames
from aoi_tools.cli.presets import lPresetNames

# =============== #
#   Definitions   #
# =============== #
logger = logging.getLogger(__name__)

SECTION_SOURCE = "[source]"

lGlobalKeys = ["rho", "mechanism", "horizon", "seed", "policy", "V", "replications", "workers", "preset", "sweep", "output"]
""" Keys accepted before the first source section, in serialization order """
lSourceKeys = ["lambda", "epsilon", "sigma", "delay", "alpha"]
""" Keys accepted inside a source section, in serialization order """
lSweepParameters = ["rho", "epsilon", "sigma", "delay", "lambda"]
""" Parameters a sweep can vary """

DEFAULT_HORIZON = 100000
DEFAULT_SEED = 0
DEFAULT_REPLICATIONS = 10
DEFAULT_OUTPUT = "results.csv"

# =========== #
#   Classes   #
# =========== #
@dataclass(frozen=True)
class ExperimentSpec:
    """
    Everything needed to run an experiment: a preset name or a network, the policy, the sweep and the output
    """
    config: NetworkConfig = None
    """ Network to simulate, None for presets """
    preset: str = None
    """ Preset to run instead of the network """
    policy: str = POLICY_DPP
    """ Policy name """
    V: float = 1.0
    """ Trade-off parameter of the drift-plus-penalty policy """
    replications: int = DEFAULT_REPLICATIONS
    """ Replications per point """
    workers: int = 1
    """ Worker processes """
    sweepParameter: str = None
    """ Swept parameter, None for a single point """
    sweepValues: tuple = ()
    """ Values of the swept parameter """
    output: str = None
    """ Output file, or directory for presets """
    horizon: int = DEFAULT_HORIZON
    """ Slots per replication """
    seed: int = DEFAULT_SEED
    """ Seed of the first replication """
    lWarnings: tuple = field(default=(), compare=False)
    """ Remarks collected while parsing """

# =========== #
#   Methods   #
# =========== #
def _number(value:str, lineNumber:int, key:str, cast=float):
    try:
        number = cast(value)
    except ValueError:
        raise ConfigParseError(f"{key}: {value!r} is not a valid number", lineNumber) from None
    if isinstance(number, float) and math.isnan(number):
        raise ConfigParseError(f"{key}: NaN is not allowed", lineNumber)
    return number

def _integer(value:str, lineNumber:int, key:str):
    # Integral floats such as 1e6 are accepted
    try:
        return int(value)
    except ValueError:
        pass
    number = _number(value, lineNumber, key)
    if not math.isfinite(number) or not number.is_integer():
        raise ConfigParseError(f"{key}: {value!r} is not an integer", lineNumber)
    return int(number)

def _check(condition:bool, message:str, lineNumber:int):
    if not condition:
        raise ConfigParseError(message, lineNumber)

def parse_delay(value:str, lineNumber:int=None):
    """
    parse_delay Read a feedback delay, a non-negative integer or "inf"

    :rtype: integer or float
    """
    if value.strip().lower() in ("inf", "infinity"):
        return INFINITE_DELAY
    delay = _integer(value, lineNumber, "delay")
    _check(delay >= 0, f"delay must be non-negative, got {delay}", lineNumber)
    return delay

def parse_parameter_value(parameter:str, value:str, lineNumber:int=None):
    """
    parse_parameter_value Read and range-check a value of a sweepable or source parameter

    :param parameter: One of rho, epsilon, sigma, delay, lambda, alpha
    :type parameter: string
    :param value: Text of the value
    :type value: string
    :param lineNumber: Line reported on errors, defaults to None
    :type lineNumber: integer, optional
    :raises ConfigParseError: The value is not a number or out of range
    :rtype: float or integer
    """
    if parameter == "delay":
        return parse_delay(value, lineNumber)
    number = _number(value, lineNumber, parameter)
    if parameter in ("rho", "lambda"):
        _check(0 < number <= 1, f"{parameter} must lie in (0, 1], got {number}", lineNumber)
    elif parameter == "epsilon":
        _check(0 <= number < 1, f"epsilon must lie in [0, 1), got {number}", lineNumber)
    elif parameter == "sigma":
        _check(0 <= number <= 1, f"sigma must lie in [0, 1], got {number}", lineNumber)
    elif parameter == "alpha":
        _check(number > 0 and math.isfinite(number), f"alpha must be positive, got {number}", lineNumber)
    else:
        raise ConfigParseError(f"unknown parameter {parameter!r}", lineNumber)
    return number

def _tokenize(text:str):
    """ Split the text into the global entries and one entry dictionary per source section """
    dGlobals, ldSources = dict(), list()
    for lineNumber, rawLine in enumerate(text.splitlines(), start=1):
        line = rawLine.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower() == SECTION_SOURCE:
            ldSources.append({"__line__": lineNumber})
            continue
        _check(not line.startswith("["), f"unknown section {line}", lineNumber)
        _check("=" in line, f"expected 'key = value', got {line!r}", lineNumber)

        key, value = (part.strip() for part in line.split("=", 1))
        _check(key != "" and value != "", f"expected 'key = value', got {line!r}", lineNumber)
        dTarget, lAllowed = (ldSources[-1], lSourceKeys) if ldSources else (dGlobals, lGlobalKeys)
        _check(key in lAllowed, f"unknown key {key!r}", lineNumber)
        _check(key not in dTarget, f"duplicate key {key!r}", lineNumber)
        dTarget[key] = (value, lineNumber)
    return dGlobals, ldSources

def _parse_sweep(value:str, lineNumber:int):
    _check(":" in value, "sweep must read '<parameter>: v1, v2, ...'", lineNumber)
    parameter, values = (part.strip() for part in value.split(":", 1))
    _check(parameter in lSweepParameters, f"cannot sweep {parameter!r}, expected one of {', '.join(lSweepParameters)}", lineNumber)
    lValues = [part.strip() for part in values.split(",") if part.strip()]
    _check(len(lValues) > 0, "a sweep needs at least one value", lineNumber)
    return parameter, tuple(parse_parameter_value(parameter, item, lineNumber) for item in lValues)

def _parse_source(index:int, dEntries:dict):
    sectionLine = dEntries.pop("__line__")
    for key in ("lambda", "epsilon"):
        _check(key in dEntries, f"source {index} misses mandatory key {key!r}", sectionLine)

    dValues = {key: parse_parameter_value(key, value, lineNumber) for key, (value, lineNumber) in dEntries.items()}
    return SourceParams(
        index=index,
        lam=dValues["lambda"],
        epsilon=dValues["epsilon"],
        sigma=dValues.get("sigma", 1.0),
        delay=dValues.get("delay", 0),
        alpha=dValues.get("alpha", 1.0),
    )

def parse_config(text:str):
    """
    parse_config Read an experiment description.
    Global keys come first, every "[source]" line opens the section of the next source. "#" starts a comment.

    :param text: Configuration text
    :type text: string
    :raises ConfigParseError: Malformed line, unknown or duplicate key, out-of-range value or missing mandatory key
    :rtype: ExperimentSpec
    """
    dGlobals, ldSources = _tokenize(text)
    lWarnings = list()

    def value_of(key, default=None):
        return dGlobals[key] if key in dGlobals else (default, None)

    preset, presetLine = value_of("preset")
    if preset is not None:
        _check(preset in lPresetNames, f"unknown preset {preset!r}, expected one of {', '.join(lPresetNames)}", presetLine)
        _check(not ldSources, "a preset defines its own sources, remove the [source] sections", presetLine)
    else:
        _check(len(ldSources) > 0, "at least one [source] section is needed", None)
        _check("rho" in dGlobals, "missing mandatory key 'rho'", None)

    horizon = _integer(*value_of("horizon", str(DEFAULT_HORIZON)), "horizon")
    _check(horizon >= 1, f"horizon must be positive, got {horizon}", value_of("horizon")[1])
    seed = _integer(*value_of("seed", str(DEFAULT_SEED)), "seed")
    _check(seed >= 0, f"seed must be non-negative, got {seed}", value_of("seed")[1])
    replications = _integer(*value_of("replications", str(DEFAULT_REPLICATIONS)), "replications")
    _check(replications >= 1, f"replications must be positive, got {replications}", value_of("replications")[1])
    workers = _integer(*value_of("workers", "1"), "workers")
    _check(workers >= 1, f"workers must be positive, got {workers}", value_of("workers")[1])
    V = _number(*value_of("V", "1.0"), "V")
    _check(0 <= V < math.inf, f"V must be a non-negative number, got {V}", value_of("V")[1])

    policy, policyLine = value_of("policy", POLICY_DPP)
    _check(policy in lPolicyNames, f"unknown policy {policy!r}, expected one of {', '.join(lPolicyNames)}", policyLine)

    mechanismText, mechanismLine = value_of("mechanism", Mechanism.ACKS_NACKS.value)
    try:
        mechanism = Mechanism(mechanismText.upper().replace("/", "_"))
    except ValueError:
        raise ConfigParseError(f"unknown mechanism {mechanismText!r}, expected ACKS or ACKS_NACKS", mechanismLine) from None

    sweepParameter, sweepValues = None, ()
    if "sweep" in dGlobals:
        sweepParameter, sweepValues = _parse_sweep(*dGlobals["sweep"])

    output = value_of("output")[0]

    config = None
    if preset is None:
        rho = parse_parameter_value("rho", *dGlobals["rho"])
        lSources = [_parse_source(index, dEntries) for index, dEntries in enumerate(ldSources, start=1)]
        tSources, rescaled = normalize_sources(lSources)
        if rescaled:
            total = math.fsum(source.alpha for source in lSources)
            lWarnings.append(f"alpha values summed to {total!r} and were normalized")
            logger.warning(lWarnings[-1])
        try:
            config = NetworkConfig(tSources, rho, mechanism, horizon, seed)
        except ParameterError as error:
            raise ConfigParseError(str(error)) from error

    return ExperimentSpec(
        config=config,
        preset=preset,
        policy=policy,
        V=V,
        replications=replications,
        workers=workers,
        sweepParameter=sweepParameter,
        sweepValues=sweepValues,
        output=output,
        horizon=horizon,
        seed=seed,
        lWarnings=tuple(lWarnings),
    )

def load_config(path):
    """
    load_config Read an experiment description from a file

    :param path: Configuration file
    :type path: str or pathlib.Path
    :rtype: ExperimentSpec
    """
    with open(path, "r") as configFile:
        return parse_config(configFile.read())

def _format_value(value):
    if value == INFINITE_DELAY:
        return "inf"
    if isinstance(value, float):
        return repr(value)
    return str(value)

def serialize_config(spec:ExperimentSpec):
    """
    serialize_config Canonical text of an experiment description, parse_config reads it back to an equal spec

    :param spec: Experiment description
    :type spec: ExperimentSpec
    :rtype: string
    """
    lLines = list()
    if spec.config is not None:
        lLines.append(f"rho = {_format_value(spec.config.rho)}")
        lLines.append(f"mechanism = {spec.config.mechanism.value}")
    lLines.append(f"horizon = {spec.horizon}")
    lLines.append(f"seed = {spec.seed}")
    lLines.append(f"policy = {spec.policy}")
    lLines.append(f"V = {_format_value(float(spec.V))}")
    lLines.append(f"replications = {spec.replications}")
    lLines.append(f"workers = {spec.workers}")
    if spec.preset is not None:
        lLines.append(f"preset = {spec.preset}")
    if spec.sweepParameter is not None:
        lLines.append(f"sweep = {spec.sweepParameter}: {', '.join(_format_value(value) for value in spec.sweepValues)}")
    if spec.output is not None:
        lLines.append(f"output = {spec.output}")

    if spec.config is not None:
        for source in spec.config.sources:
            lLines.append("")
            lLines.append(SECTION_SOURCE)
            lLines.append(f"lambda = {_format_value(float(source.lam))}")
            lLines.append(f"epsilon = {_format_value(float(source.epsilon))}")
            lLines.append(f"sigma = {_format_value(float(source.sigma))}")
            lLines.append(f"delay = {_format_value(source.delay if source.delay == INFINITE_DELAY else int(source.delay))}")
            lLines.append(f"alpha = {_format_value(float(source.alpha))}")
    return "\n".join(lLines) + "\n"
