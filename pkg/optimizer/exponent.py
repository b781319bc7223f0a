"""Growth exponent of expected subgraph counts.

For an attainable ordered subgraph on ``k`` positions the expected number of
copies grows as ``t^(k+B) log^(r-1) t`` where

    B = max over s in {0..k} of  -s + sum_{i>s} β(i),
    β(i) = χ (d_in(i) - d_out(i)) - d_in(i),

and ``r`` is the number of maximisers ``s``. Positions up to the smallest
maximiser are old hubs, positions past the largest one are young vertices
of constant degree, anything in between is free.
"""

from typing import Any

from pydantic import Field
from pydantic.dataclasses import dataclass

from model import ModelParams
from subgraphs import OrderedSubgraph, UnorderedDigraph, distinct_orderings, is_attainable
from utils.errors import NotAttainableError, ParameterError
from utils.types import DegreeClass

from .symbolic import AffineExponent, ChiEvaluator, Scalar


@dataclass(frozen=True)
class ExponentReport:
    subgraph: OrderedSubgraph
    beta: tuple[float, ...]
    B: float
    optimizers: tuple[int, ...]
    r: int
    exponent: float
    log_power: int
    classes: tuple[DegreeClass, ...]
    symbolic: AffineExponent
    exact_ties: bool = True
    candidates: tuple[AffineExponent, ...] = Field(default_factory=tuple)

    @property
    def growth(self) -> tuple[float, int]:
        return self.exponent, self.log_power

    def to_dict(self) -> dict[str, Any]:
        return {
            "subgraph": self.subgraph.to_inline(),
            "k": self.subgraph.k,
            "beta": list(self.beta),
            "B": self.B,
            "optimizers": list(self.optimizers),
            "r": self.r,
            "exponent": self.exponent,
            "exponent_symbolic": self.symbolic.render_tau(),
            "log_power": self.log_power,
            "classes": [cls.value for cls in self.classes],
            "exact_ties": self.exact_ties,
        }


def beta_coefficients(h: OrderedSubgraph) -> list[AffineExponent]:
    """β(i) per position as ``-d_in + (d_in - d_out)·χ``."""
    d_in = h.in_degrees()
    d_out = h.out_degrees()
    return [AffineExponent(-d_in[i], d_in[i] - d_out[i]) for i in range(h.k)]


def _require_attainable(h: OrderedSubgraph, params: ModelParams) -> None:
    if not is_attainable(h, params.m):
        raise ParameterError(
            f"ordered subgraph {h.to_inline()} is not attainable for m={params.m}"
        )


def beta_values(h: OrderedSubgraph, params: ModelParams) -> list[float]:
    _require_attainable(h, params)
    chi = params.chi()
    return [float(form.at(chi)) for form in beta_coefficients(h)]


def candidate_values(h: OrderedSubgraph) -> list[AffineExponent]:
    """``-s + sum_{i>s} β(i)`` for s = 0..k."""
    betas = beta_coefficients(h)
    candidates = []
    for s in range(h.k + 1):
        total = AffineExponent(-s, 0)
        for form in betas[s:]:
            total = total + form
        candidates.append(total)
    return candidates


def degree_classes(k: int, optimizers: tuple[int, ...]) -> tuple[DegreeClass, ...]:
    low, high = min(optimizers), max(optimizers)
    classes = []
    for position in range(1, k + 1):
        if position <= low:
            classes.append(DegreeClass.OLD_HUB)
        elif position > high:
            classes.append(DegreeClass.YOUNG_CONSTANT)
        else:
            classes.append(DegreeClass.FREE)
    return tuple(classes)


def _check_optimum(
    h: OrderedSubgraph,
    values: list[Scalar],
    optimizers: tuple[int, ...],
    evaluator: ChiEvaluator,
) -> None:
    assert evaluator.equal(values[0], -h.edge_count), "s=0 candidate must equal -edges"
    assert not evaluator.greater(-h.k, values[optimizers[0]]), "B below the s=k candidate"
    for first, second in zip(optimizers, optimizers[1:]):
        for between in range(first + 1, second):
            assert evaluator.greater(values[second], values[between]), (
                f"non-optimal s={between} between optimizers {first} and {second}"
            )


def solve_B(h: OrderedSubgraph, params: ModelParams) -> ExponentReport:
    _require_attainable(h, params)
    evaluator = ChiEvaluator(params)
    candidates = candidate_values(h)
    values = [evaluator.value(form) for form in candidates]

    best = values[0]
    for value in values[1:]:
        if evaluator.greater(value, best):
            best = value
    optimizers = tuple(s for s, value in enumerate(values) if evaluator.equal(value, best))
    _check_optimum(h, values, optimizers, evaluator)

    leading = candidates[optimizers[0]]
    B = float(values[optimizers[0]])
    r = len(optimizers)
    return ExponentReport(
        subgraph=h,
        beta=tuple(float(form.at(evaluator.chi)) for form in beta_coefficients(h)),
        B=B,
        optimizers=optimizers,
        r=r,
        exponent=h.k + B,
        log_power=r - 1,
        classes=degree_classes(h.k, optimizers),
        symbolic=leading.shift(h.k),
        exact_ties=evaluator.exact,
        candidates=tuple(candidates),
    )


def solve_B_unordered(
    g: UnorderedDigraph, params: ModelParams
) -> tuple[ExponentReport, list[ExponentReport]]:
    """Best report over all attainable orderings: largest B, then largest r."""
    orderings = distinct_orderings(g, params.m)
    if not orderings:
        raise NotAttainableError(
            f"no ordering of {g.to_inline()} is attainable for m={params.m}"
        )
    evaluator = ChiEvaluator(params)
    reports = [solve_B(h, params) for h in orderings]

    best = reports[0]
    for report in reports[1:]:
        current = evaluator.value(best.symbolic)
        challenger = evaluator.value(report.symbolic)
        if evaluator.greater(challenger, current) or (
            evaluator.equal(challenger, current) and report.r > best.r
        ):
            best = report
    return best, reports
