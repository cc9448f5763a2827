from aoi_tools.cli.config import ExperimentSpec, load_config, parse_config, serialize_config
from aoi_tools.cli.presets import apply_sweep_value, gaw_table_config, grouped_config, lPresetNames, run_preset, run_spec
from aoi_tools.cli.report import ReportRow, emit_csv, format_table
