"""Error hierarchy shared by the library and the command-line harness.

Every error carries a stable integer ``code`` that the harness uses as the
process exit status and writes into the machine-readable error record.
"""

from typing import Any


class PamError(Exception):
    """Base class for all domain errors."""

    code: int = 1

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message

    def to_record(self) -> dict[str, Any]:
        return {
            "error": type(self).__name__,
            "code": self.code,
            "message": self.message,
        }


class ParameterError(PamError, ValueError):
    """Model parameters, sizes, seeds or edge sets are invalid."""

    code = 10


class SubgraphFormatError(PamError, ValueError):
    """A subgraph description could not be parsed or is structurally invalid."""

    code = 11


class ArtifactIOError(PamError, OSError):
    """Reading or writing an artifact failed."""

    code = 12


class SizeLimitError(PamError, ValueError):
    """An enumeration guard was exceeded."""

    code = 13


class NotAttainableError(PamError, ValueError):
    """No ordering of the digraph can occur in the model."""

    code = 14


class ConfigError(PamError, ValueError):
    """The run configuration is malformed."""

    code = 15
