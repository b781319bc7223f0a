"""Shared enums and lightweight type aliases."""

from enum import Enum


class Provenance(Enum):
    """Which construction produced a graph."""

    SEQUENTIAL = "sequential"
    URN = "urn"


class CensusMode(Enum):
    """Counting strategy behind a census result."""

    TRIANGLE_FAST = "triangle-fast"
    GENERAL = "general"
    BRUTE_FORCE = "brute-force"


class DegreeClass(Enum):
    """Most-likely degree regime of a subgraph position."""

    OLD_HUB = "old-hub"
    YOUNG_CONSTANT = "young-constant"
    FREE = "free"


class VerdictStatus(Enum):
    """Outcome of the conditional-concentration criterion."""

    CRITERION_MET = "criterion-met"
    NON_CONCENTRATION_CANDIDATE = "non-concentration-candidate"
    INAPPLICABLE = "inapplicable"


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


class Command(Enum):
    """Harness entry points, named as on the command line."""

    GENERATE = "generate"
    COUNT = "count"
    PREDICT = "predict"
    ATLAS = "atlas"
    TRIANGLES_EXACT = "triangles exact"
    TRIANGLES_ASYMPTOTIC = "triangles asymptotic"
    EMBED_PROB = "embed-prob"
    EXPERIMENT_SCALING = "experiment scaling"
    CONCENTRATION_CLASSIFY = "concentration classify"
    CONCENTRATION_EXPERIMENT = "concentration experiment"
    DIAGNOSE = "diagnose"


# (source, target) pair; for ordered subgraphs both ends are π-positions
Edge = tuple[int, int]

# (exponent, log_power) pair ordered lexicographically
GrowthOrder = tuple[float, int]

Row = dict[str, object]
