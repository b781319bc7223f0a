from .counting import (
    CensusResult,
    brute_force_count,
    census,
    count_ordered,
    count_triangles,
    is_triangle,
)
from .experiments import (
    ReplicaJob,
    ScalingRow,
    ScalingTable,
    build_graph,
    corrected_slope,
    replica_seeds,
    replicate_counts,
    resolve_orderings,
    scaling_experiment,
    summarize,
    validate_sizes,
)

__all__ = [
    "CensusResult",
    "ReplicaJob",
    "ScalingRow",
    "ScalingTable",
    "brute_force_count",
    "build_graph",
    "census",
    "corrected_slope",
    "count_ordered",
    "count_triangles",
    "is_triangle",
    "replica_seeds",
    "replicate_counts",
    "resolve_orderings",
    "scaling_experiment",
    "summarize",
    "validate_sizes",
]
