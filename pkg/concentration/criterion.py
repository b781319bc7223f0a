"""Symbolic test for conditional concentration of subgraph counts.

A count whose expectation diverges is conditionally concentrated when the
expected count of every merged shape (two copies overlapping on an edge)
is of smaller order than the squared expectation. Orders are compared as
(exponent, log_power) pairs, lexicographically and strictly, never from
finite-t numerics. Failing the test only flags a candidate for
non-concentration.
"""

from typing import Any

from pydantic import Field
from pydantic.dataclasses import dataclass

from model import ModelParams
from optimizer import ChiEvaluator, solve_B, solve_B_unordered
from optimizer.symbolic import Scalar
from subgraphs import OrderedSubgraph, attainable_orderings, merge_copies
from utils.errors import SizeLimitError
from utils.logger import Logger
from utils.types import GrowthOrder, VerdictStatus

CLASSIFY_MAX_K = 5


@dataclass(frozen=True)
class MergedShape:
    shape_id: str
    k: int
    edges: str
    attainable: bool
    exponent: float | None = None
    exponent_symbolic: str = ""
    log_power: int | None = None
    violates: bool = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "shape_id": self.shape_id,
            "k": self.k,
            "edges": self.edges,
            "attainable": self.attainable,
            "exponent": self.exponent,
            "exponent_symbolic": self.exponent_symbolic,
            "log_power": self.log_power,
            "violates": self.violates,
        }


@dataclass(frozen=True)
class ConcentrationVerdict:
    subgraph_id: str
    own: GrowthOrder
    doubled: GrowthOrder
    merged_max: GrowthOrder | None
    criterion_met: bool
    status: VerdictStatus
    merged_table: tuple[MergedShape, ...] = Field(default_factory=tuple)

    @property
    def violating(self) -> list[MergedShape]:
        return [shape for shape in self.merged_table if shape.violates]

    def to_dict(self) -> dict[str, Any]:
        return {
            "subgraph": self.subgraph_id,
            "own": list(self.own),
            "doubled": list(self.doubled),
            "merged_max": list(self.merged_max) if self.merged_max else None,
            "criterion_met": self.criterion_met,
            "status": self.status.value,
            "merged_table": [shape.to_dict() for shape in self.merged_table],
        }


def _at_least(
    evaluator: ChiEvaluator, first: tuple[Scalar, int], second: tuple[Scalar, int]
) -> bool:
    """first >= second lexicographically, with ties on the exponent decided by the evaluator."""
    if evaluator.greater(first[0], second[0]):
        return True
    if evaluator.equal(first[0], second[0]):
        return first[1] >= second[1]
    return False


def classify(h: OrderedSubgraph, params: ModelParams) -> ConcentrationVerdict:
    if h.k > CLASSIFY_MAX_K:
        raise SizeLimitError(f"classification supports k <= {CLASSIFY_MAX_K}, got k={h.k}")
    evaluator = ChiEvaluator(params)
    report = solve_B(h, params)
    own_value = evaluator.value(report.symbolic)
    own = (report.exponent, report.log_power)
    doubled_exact = (2 * own_value, 2 * report.log_power)
    doubled = (2 * report.exponent, 2 * report.log_power)
    subgraph_id = h.to_inline()

    if _at_least(evaluator, (0, 0), (own_value, report.log_power)):
        Logger.stage("classify", "inapplicable", subgraph=subgraph_id, exponent=report.exponent)
        return ConcentrationVerdict(
            subgraph_id=subgraph_id,
            own=own,
            doubled=doubled,
            merged_max=None,
            criterion_met=False,
            status=VerdictStatus.INAPPLICABLE,
        )

    table: list[MergedShape] = []
    best: tuple[Scalar, int] | None = None
    best_float: GrowthOrder | None = None
    for index, shape in enumerate(merge_copies(h.unordered()), start=1):
        base = {"shape_id": f"merge-{index:02d}", "k": shape.k, "edges": shape.to_inline()}
        if not attainable_orderings(shape, params.m):
            table.append(MergedShape(**base, attainable=False))
            continue
        merged, _ = solve_B_unordered(shape, params)
        value = (evaluator.value(merged.symbolic), merged.log_power)
        table.append(
            MergedShape(
                **base,
                attainable=True,
                exponent=merged.exponent,
                exponent_symbolic=merged.symbolic.render_tau(),
                log_power=merged.log_power,
                violates=_at_least(evaluator, value, doubled_exact),
            )
        )
        if best is None or not _at_least(evaluator, best, value):
            best = value
            best_float = (merged.exponent, merged.log_power)

    criterion_met = best is None or not _at_least(evaluator, best, doubled_exact)
    status = (
        VerdictStatus.CRITERION_MET if criterion_met else VerdictStatus.NON_CONCENTRATION_CANDIDATE
    )
    Logger.stage(
        "classify", "completed", subgraph=subgraph_id, status=status.value,
        shapes=len(table), merged_max=best_float,
    )
    return ConcentrationVerdict(
        subgraph_id=subgraph_id,
        own=own,
        doubled=doubled,
        merged_max=best_float,
        criterion_met=criterion_met,
        status=status,
        merged_table=tuple(table),
    )
