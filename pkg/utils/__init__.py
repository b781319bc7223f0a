from .errors import (
    ArtifactIOError,
    ConfigError,
    NotAttainableError,
    PamError,
    ParameterError,
    SizeLimitError,
    SubgraphFormatError,
)
from .logger import Logger
from .parallel import map_ordered, resolve_workers
from .types import (
    CensusMode,
    Command,
    DegreeClass,
    Edge,
    GrowthOrder,
    OutputFormat,
    Provenance,
    Row,
    VerdictStatus,
)

__all__ = [
    "ArtifactIOError",
    "CensusMode",
    "Command",
    "ConfigError",
    "DegreeClass",
    "Edge",
    "GrowthOrder",
    "Logger",
    "NotAttainableError",
    "OutputFormat",
    "PamError",
    "ParameterError",
    "Provenance",
    "Row",
    "SizeLimitError",
    "SubgraphFormatError",
    "VerdictStatus",
    "map_ordered",
    "resolve_workers",
]
