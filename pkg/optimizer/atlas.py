"""Exponent atlas over the catalog of small shapes."""

from fractions import Fraction
from typing import Any

from pydantic import Field
from pydantic.dataclasses import dataclass

from model import ModelParams
from subgraphs import UnorderedDigraph, attainable_orderings, distinct_orderings
from utils.logger import Logger
from utils.parallel import map_ordered

from .catalog import CatalogEntry, connected_dag_shapes
from .exponent import candidate_values, solve_B_unordered
from .symbolic import AffineExponent, chi_to_tau, upper_envelope


@dataclass(frozen=True)
class AtlasRow:
    graph_id: str
    k: int
    edges: str
    attainable: bool
    ordering: str = ""
    exponent: float | None = None
    exponent_symbolic: str = ""
    log_power: int | None = None
    classes: str = ""
    depends_on_tau: bool = False
    tau_boundaries: tuple[str, ...] = Field(default_factory=tuple)

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph_id": self.graph_id,
            "k": self.k,
            "edges": self.edges,
            "attainable": self.attainable,
            "ordering": self.ordering,
            "exponent": self.exponent,
            "exponent_symbolic": self.exponent_symbolic,
            "log_power": self.log_power,
            "classes": self.classes,
            "depends_on_tau": self.depends_on_tau,
            "tau_boundaries": ";".join(self.tau_boundaries),
        }


def _format_fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def exponent_phases(g: UnorderedDigraph, m: int) -> list[tuple[Fraction, Fraction, AffineExponent]]:
    """Pieces of the optimal exponent of ``g`` over χ in (0, 1)."""
    forms: list[AffineExponent] = []
    for h in distinct_orderings(g, m):
        forms.extend(form.shift(h.k) for form in candidate_values(h))
    return upper_envelope(forms)


def tau_boundaries(g: UnorderedDigraph, m: int) -> list[Fraction]:
    pieces = exponent_phases(g, m)
    return [chi_to_tau(hi) for _, hi, _ in pieces[:-1]]


def atlas_row(entry: CatalogEntry, params: ModelParams) -> AtlasRow:
    graph = entry.graph
    base = {"graph_id": entry.graph_id, "k": graph.k, "edges": graph.to_inline()}
    if not attainable_orderings(graph, params.m):
        return AtlasRow(**base, attainable=False)
    best, _ = solve_B_unordered(graph, params)
    boundaries = tau_boundaries(graph, params.m)
    return AtlasRow(
        **base,
        attainable=True,
        ordering=best.subgraph.to_inline(),
        exponent=best.exponent,
        exponent_symbolic=best.symbolic.render_tau(),
        log_power=best.log_power,
        classes="/".join(cls.value for cls in best.classes),
        depends_on_tau=bool(boundaries),
        tau_boundaries=tuple(_format_fraction(tau) for tau in boundaries),
    )


def _row_task(job: tuple[CatalogEntry, ModelParams]) -> AtlasRow:
    entry, params = job
    return atlas_row(entry, params)


def atlas(
    params: ModelParams,
    sizes: tuple[int, ...] = (3, 4),
    workers: int | None = None,
) -> list[AtlasRow]:
    entries = [entry for k in sizes for entry in connected_dag_shapes(k)]
    rows = map_ordered(_row_task, [(entry, params) for entry in entries], workers)
    Logger.stage("atlas", "completed", rows=len(rows), tau=params.tau())
    return rows
