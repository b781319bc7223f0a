"""Replicated counting experiments across graph sizes."""

import math
from typing import Any

import numpy as np
from pydantic import Field
from pydantic.dataclasses import dataclass

from generation import PAGraph, generate_sequential, generate_urn
from model import ModelParams, Seed
from optimizer import ExponentReport, solve_B, solve_B_unordered
from subgraphs import OrderedSubgraph, UnorderedDigraph, distinct_orderings
from utils.errors import ParameterError
from utils.logger import Logger
from utils.parallel import map_ordered

from .counting import count_ordered, count_triangles, is_triangle

GENERATORS = ("urn", "sequential")


@dataclass(frozen=True)
class ReplicaJob:
    params: ModelParams
    t: int
    seed: Seed
    orderings: tuple[OrderedSubgraph, ...]
    generator: str = "urn"


def build_graph(params: ModelParams, t: int, seed: Seed, generator: str) -> PAGraph:
    if generator == "urn":
        graph, _ = generate_urn(params, t, seed)
        return graph
    if generator == "sequential":
        return generate_sequential(params, t, seed)
    raise ParameterError(f"unknown generator '{generator}', expected one of {GENERATORS}")


def count_all_orderings(graph: PAGraph, orderings: tuple[OrderedSubgraph, ...]) -> int:
    return sum(
        count_triangles(graph) if is_triangle(h) else count_ordered(graph, h)
        for h in orderings
    )


def run_replica(job: ReplicaJob) -> int:
    graph = build_graph(job.params, job.t, job.seed, job.generator)
    return count_all_orderings(graph, job.orderings)


def resolve_orderings(
    shape: OrderedSubgraph | UnorderedDigraph, params: ModelParams
) -> tuple[tuple[OrderedSubgraph, ...], ExponentReport]:
    """Orderings to count and the report predicting their total."""
    if isinstance(shape, OrderedSubgraph):
        return (shape,), solve_B(shape, params)
    best, _ = solve_B_unordered(shape, params)
    return tuple(distinct_orderings(shape, params.m)), best


def replica_seeds(seed: Seed, t_list: list[int], replicas: int) -> list[list[Seed]]:
    """Stream ``i * replicas + r`` for the r-th replica at the i-th size."""
    return [
        [seed.replica(i * replicas + r) for r in range(replicas)]
        for i in range(len(t_list))
    ]


def predicted_growth(t: int, report: ExponentReport) -> float:
    return t**report.exponent * math.log(t) ** report.log_power


def corrected_slope(t_list: list[int], means: list[float], log_power: int) -> float | None:
    """Least-squares slope of log(mean / log^p t) against log t."""
    points = [(t, mean) for t, mean in zip(t_list, means) if mean > 0 and t > 1]
    if len(points) < 2:
        return None
    x = np.log([t for t, _ in points])
    y = np.log([mean for _, mean in points]) - log_power * np.log(x)
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def validate_sizes(t_list: list[int], replicas: int) -> None:
    if not t_list:
        raise ParameterError("t_list must not be empty")
    if any(t < 2 for t in t_list):
        raise ParameterError(f"every t must be at least 2, got {t_list}")
    if any(b <= a for a, b in zip(t_list, t_list[1:])):
        raise ParameterError(f"t_list must be strictly increasing, got {t_list}")
    if replicas < 1:
        raise ParameterError(f"replicas must be at least 1, got {replicas}")


def replicate_counts(
    params: ModelParams,
    orderings: tuple[OrderedSubgraph, ...],
    t_list: list[int],
    replicas: int,
    seed: Seed,
    generator: str = "urn",
    workers: int | None = None,
) -> list[list[int]]:
    """Counts per size and replica, independent of worker scheduling."""
    seeds = replica_seeds(seed, t_list, replicas)
    jobs = [
        ReplicaJob(params=params, t=t, seed=s, orderings=orderings, generator=generator)
        for t, row in zip(t_list, seeds)
        for s in row
    ]
    flat = map_ordered(run_replica, jobs, workers)
    return [flat[i * replicas : (i + 1) * replicas] for i in range(len(t_list))]


@dataclass(frozen=True)
class ScalingRow:
    t: int
    mean: float
    stderr: float
    predicted: float

    def to_dict(self, slope: float | None) -> dict[str, Any]:
        return {
            "t": self.t,
            "mean": self.mean,
            "stderr": self.stderr,
            "predicted": self.predicted,
            "corrected_slope": slope,
        }


@dataclass(frozen=True)
class ScalingTable:
    subgraph: str
    exponent: float
    exponent_symbolic: str
    log_power: int
    corrected_slope: float | None
    rows: tuple[ScalingRow, ...] = Field(default_factory=tuple)

    def records(self) -> list[dict[str, Any]]:
        return [row.to_dict(self.corrected_slope) for row in self.rows]


def summarize(counts: list[int]) -> tuple[float, float]:
    values = np.asarray(counts, dtype=np.float64)
    mean = float(values.mean())
    if values.size < 2:
        return mean, 0.0
    return mean, float(values.std(ddof=1) / math.sqrt(values.size))


def scaling_experiment(
    params: ModelParams,
    shape: OrderedSubgraph | UnorderedDigraph,
    t_list: list[int],
    replicas: int,
    seed: Seed,
    generator: str = "urn",
    workers: int | None = None,
) -> ScalingTable:
    validate_sizes(t_list, replicas)
    orderings, report = resolve_orderings(shape, params)
    Logger.stage(
        "scaling_experiment", "started", subgraph=shape.to_inline(), t_list=t_list,
        replicas=replicas, generator=generator,
    )
    counts = replicate_counts(params, orderings, t_list, replicas, seed, generator, workers)

    rows = []
    means = []
    for t, per_replica in zip(t_list, counts):
        mean, stderr = summarize(per_replica)
        means.append(mean)
        rows.append(ScalingRow(t=t, mean=mean, stderr=stderr, predicted=predicted_growth(t, report)))
    slope = corrected_slope(t_list, means, report.log_power)
    Logger.stage("scaling_experiment", "completed", corrected_slope=slope, exponent=report.exponent)
    return ScalingTable(
        subgraph=shape.to_inline(),
        exponent=report.exponent,
        exponent_symbolic=report.symbolic.render_tau(),
        log_power=report.log_power,
        corrected_slope=slope,
        rows=tuple(rows),
    )
