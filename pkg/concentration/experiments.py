"""Empirical spread of subgraph counts across independent replicas."""

from typing import Any

import numpy as np
from pydantic import Field
from pydantic.dataclasses import dataclass

from census import replicate_counts, resolve_orderings, validate_sizes
from model import ModelParams, Seed
from subgraphs import OrderedSubgraph, UnorderedDigraph
from utils.logger import Logger


@dataclass(frozen=True)
class VarianceRow:
    t: int
    mean: float
    variance: float
    relative_variance: float | None
    counts: tuple[int, ...] = Field(default_factory=tuple)

    def to_dict(self) -> dict[str, Any]:
        return {
            "t": self.t,
            "mean": self.mean,
            "variance": self.variance,
            "relative_variance": self.relative_variance,
        }

    def normalized(self) -> list[float | None]:
        if self.mean == 0:
            return [None for _ in self.counts]
        return [count / self.mean for count in self.counts]


@dataclass(frozen=True)
class VarianceTable:
    subgraph: str
    rows: tuple[VarianceRow, ...]

    def records(self) -> list[dict[str, Any]]:
        return [row.to_dict() for row in self.rows]

    def density_records(self) -> list[dict[str, Any]]:
        """Long format: one row per (t, replica)."""
        records = []
        for row in self.rows:
            for replica, (count, scaled) in enumerate(zip(row.counts, row.normalized())):
                records.append(
                    {"t": row.t, "replica": replica, "count": count, "normalized": scaled}
                )
        return records

    def histogram_records(self, bins: int = 30) -> list[dict[str, Any]]:
        """Density estimate of count/mean per t."""
        records = []
        for row in self.rows:
            if row.mean == 0:
                continue
            scaled = np.asarray(row.counts, dtype=np.float64) / row.mean
            density, edges = np.histogram(scaled, bins=bins, density=True)
            for lo, hi, value in zip(edges[:-1], edges[1:], density):
                records.append(
                    {"t": row.t, "bin_lo": float(lo), "bin_hi": float(hi), "density": float(value)}
                )
        return records


def variance_experiment(
    params: ModelParams,
    shape: OrderedSubgraph | UnorderedDigraph,
    t_list: list[int],
    replicas: int,
    seed: Seed,
    generator: str = "urn",
    workers: int | None = None,
) -> VarianceTable:
    validate_sizes(t_list, replicas)
    orderings, _ = resolve_orderings(shape, params)
    counts = replicate_counts(params, orderings, t_list, replicas, seed, generator, workers)

    rows = []
    for t, per_replica in zip(t_list, counts):
        values = np.asarray(per_replica, dtype=np.float64)
        mean = float(values.mean())
        variance = float(values.var(ddof=1)) if values.size > 1 else 0.0
        relative = variance / mean**2 if mean > 0 else None
        rows.append(
            VarianceRow(
                t=t, mean=mean, variance=variance, relative_variance=relative,
                counts=tuple(int(c) for c in per_replica),
            )
        )
        Logger.stage("variance_experiment", "size done", t=t, mean=mean, relative_variance=relative)
    return VarianceTable(subgraph=shape.to_inline(), rows=tuple(rows))
