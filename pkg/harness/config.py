"""Run configuration and the flat ``key=value`` config file."""

from pathlib import Path
from typing import Annotated, Any

import click
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from model import ModelParams, Seed
from utils.errors import ArtifactIOError, ConfigError
from utils.types import CensusMode, Command, OutputFormat

STOCHASTIC_COMMANDS = frozenset(
    {
        Command.GENERATE,
        Command.EXPERIMENT_SCALING,
        Command.CONCENTRATION_EXPERIMENT,
        Command.DIAGNOSE,
    }
)

_NEEDS_PARAMS = frozenset(Command) - {Command.COUNT}
_NEEDS_T = frozenset(
    {
        Command.GENERATE,
        Command.TRIANGLES_EXACT,
        Command.TRIANGLES_ASYMPTOTIC,
        Command.EMBED_PROB,
        Command.DIAGNOSE,
    }
)
_NEEDS_T_LIST = frozenset({Command.EXPERIMENT_SCALING, Command.CONCENTRATION_EXPERIMENT})
_NEEDS_SUBGRAPH = frozenset(
    {
        Command.COUNT,
        Command.PREDICT,
        Command.EXPERIMENT_SCALING,
        Command.CONCENTRATION_CLASSIFY,
        Command.CONCENTRATION_EXPERIMENT,
    }
)

_JSON_BY_DEFAULT = frozenset(
    {
        Command.PREDICT,
        Command.TRIANGLES_EXACT,
        Command.TRIANGLES_ASYMPTOTIC,
        Command.EMBED_PROB,
        Command.CONCENTRATION_CLASSIFY,
    }
)

# keys that never reach an artifact
_RUNTIME_ONLY = {"workers", "out", "dump_csv"}


class ExperimentConfig(BaseModel):
    """Everything one harness invocation needs, validated up front."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    m: int | None = None
    delta: float | None = None
    t: int | None = None
    t_list: tuple[int, ...] = ()
    replicas: Annotated[int, Field(ge=1)] = 1
    seed: Annotated[int, Field(ge=0, lt=2**64)] | None = None
    subgraph: str | None = None
    ordered: bool = False
    graph: str | None = None
    edges: str | None = None
    generator: str = "urn"
    sampler: str = "fenwick"
    mode: CensusMode | None = None
    sizes: tuple[int, ...] = (3, 4)
    table: str = "density"
    k_min: Annotated[int, Field(ge=2)] = 2
    d_min: Annotated[int, Field(ge=1)] = 10
    out: str | None = None
    dump_csv: str | None = None
    output_format: OutputFormat | None = None
    workers: Annotated[int, Field(ge=1)] | None = None

    @model_validator(mode="after")
    def _check_command_inputs(self) -> "ExperimentConfig":
        command = self.command
        if command in STOCHASTIC_COMMANDS and self.seed is None:
            raise ValueError(f"'{command.value}' is stochastic and needs --seed")
        if command in _NEEDS_PARAMS and (self.m is None or self.delta is None):
            raise ValueError(f"'{command.value}' needs --m and --delta")
        if command in _NEEDS_T and self.t is None:
            raise ValueError(f"'{command.value}' needs --t")
        if command in _NEEDS_T_LIST:
            if not self.t_list:
                raise ValueError(f"'{command.value}' needs --t as a comma-separated list")
            if any(t < 2 for t in self.t_list):
                raise ValueError(f"every t must be at least 2, got {list(self.t_list)}")
            if any(b <= a for a, b in zip(self.t_list, self.t_list[1:])):
                raise ValueError(f"t values must be strictly increasing, got {list(self.t_list)}")
        if command in _NEEDS_SUBGRAPH and not self.subgraph:
            raise ValueError(f"'{command.value}' needs --subgraph")
        if command is Command.COUNT and not self.graph:
            raise ValueError("'count' needs --graph")
        if command is Command.EMBED_PROB and not self.edges:
            raise ValueError("'embed-prob' needs --edges")
        if self.generator not in {"urn", "sequential"}:
            raise ValueError(f"unknown generator '{self.generator}'")
        if self.table not in {"density", "summary", "histogram"}:
            raise ValueError(f"unknown table '{self.table}'")
        return self

    def params(self) -> ModelParams:
        return ModelParams(m=self.m, delta=self.delta)

    def root_seed(self) -> Seed:
        return Seed(value=self.seed)

    def resolved_format(self) -> OutputFormat:
        if self.output_format is not None:
            return self.output_format
        return OutputFormat.JSON if self.command in _JSON_BY_DEFAULT else OutputFormat.CSV

    def to_record(self) -> dict[str, Any]:
        """Artifact-facing view; worker count and paths are left out."""
        record = self.model_dump(mode="json", exclude=_RUNTIME_ONLY, exclude_none=True)
        record["t_list"] = list(self.t_list)
        record["sizes"] = list(self.sizes)
        record["output_format"] = self.resolved_format().value
        return record


def build_config(command: Command, **options: Any) -> ExperimentConfig:
    try:
        return ExperimentConfig(command=command, **options)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(part) for part in first["loc"])
        message = first["msg"] if not where else f"{where}: {first['msg']}"
        raise ConfigError(f"invalid configuration: {message}") from exc


def parse_config_text(text: str) -> dict[str, str]:
    """Flat ``key=value`` lines; ``#`` comments and blank lines are skipped."""
    values: dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"config line {number}: expected key=value, got '{raw.strip()}'")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError(f"config line {number}: empty key")
        values[key.replace("-", "_")] = value
    return values


def read_config_file(path: str | Path) -> dict[str, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ArtifactIOError(f"cannot read config file '{path}': {exc}") from exc
    return parse_config_text(text)


def _command_defaults(command: click.Command, values: dict[str, str]) -> dict[str, str]:
    defaults = {}
    for param in command.params:
        keys = {param.name} | {opt.lstrip("-").replace("-", "_") for opt in param.opts}
        for key in keys:
            if key in values:
                defaults[param.name] = values[key]
    return defaults


def default_map_for(group: click.Group, values: dict[str, str]) -> dict[str, Any]:
    """Spread flat values over every subcommand so click treats them as defaults.

    A key matches a parameter by its name or by any of its option spellings,
    so ``t=1000,10000`` reaches the ``--t`` option of every command.
    """
    mapping: dict[str, Any] = {}
    for name, command in group.commands.items():
        if isinstance(command, click.Group):
            mapping[name] = default_map_for(command, values)
        else:
            mapping[name] = _command_defaults(command, values)
    return mapping
