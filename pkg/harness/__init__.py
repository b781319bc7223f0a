from .config import ExperimentConfig, build_config, default_map_for, parse_config_text, read_config_file
from .emit import emit, render_csv, render_json
from .runner import resolve_subgraph, run, run_command

__all__ = [
    "ExperimentConfig",
    "build_config",
    "default_map_for",
    "emit",
    "parse_config_text",
    "read_config_file",
    "render_csv",
    "render_json",
    "resolve_subgraph",
    "run",
    "run_command",
]
