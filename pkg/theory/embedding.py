"""Exact probabilities of labeled edge sets.

Given the urn strengths, edge ``(u, v, j)`` is present with probability
``psi_u * prod_{u<h<v} (1 - psi_h)`` independently over labeled edges, and
the strengths are independent Beta variables. The probability that a set
of labeled edges is present is therefore a product over vertices of
``E[psi_v^{a_v} (1 - psi_v)^{b_v}]``.
"""

import json
import math
from collections import Counter
from itertools import combinations
from pathlib import Path
from typing import Any

from pydantic import ValidationError, field_validator, model_validator
from pydantic.dataclasses import dataclass

from generation import beta_shapes
from model import ModelParams
from subgraphs import OrderedSubgraph
from utils.errors import ArtifactIOError, ParameterError

from .moments import log_beta_moment

LabeledEdge = tuple[int, int, int]


@dataclass(frozen=True)
class EdgeSet:
    """Labeled edges ``(u, v, j)``: receiver ``u``, sender ``v``, label ``j``."""

    edges: tuple[LabeledEdge, ...]

    @field_validator("edges", mode="after")
    @classmethod
    def _sort(cls, value: tuple[LabeledEdge, ...]) -> tuple[LabeledEdge, ...]:
        return tuple(sorted(value))

    @model_validator(mode="after")
    def _check(self):
        slots = set()
        for u, v, j in self.edges:
            if not (1 <= u < v and v >= 2 and j >= 1):
                raise ValueError(f"invalid labeled edge ({u}, {v}, {j})")
            if (v, j) in slots:
                raise ValueError(f"edge slot ({v}, {j}) used twice")
            slots.add((v, j))
        return self

    @property
    def max_vertex(self) -> int:
        return max((v for _, v, _ in self.edges), default=0)

    def out_degrees(self) -> Counter:
        return Counter(v for _, v, _ in self.edges)

    def to_dict(self) -> dict[str, Any]:
        return {"edges": [list(edge) for edge in self.edges]}


@dataclass(frozen=True)
class MomentProfile:
    """Non-zero exponents ``(a_v, b_v)`` per vertex; absent vertices have (0, 0)."""

    exponents: dict[int, tuple[int, int]]

    @classmethod
    def from_edges(cls, es: EdgeSet) -> "MomentProfile":
        a: Counter = Counter()
        b: Counter = Counter()
        for u, v, _ in es.edges:
            a[u] += 1
            for between in range(u + 1, v):
                b[between] += 1
        vertices = sorted(set(a) | set(b))
        return cls(exponents={vertex: (a[vertex], b[vertex]) for vertex in vertices})

    @property
    def total_in(self) -> int:
        return sum(a for a, _ in self.exponents.values())


def parse_edge_set(text: str) -> EdgeSet:
    """JSON ``{"edges": [[u, v, j], ...]}`` or one ``u v j`` triple per line."""
    stripped = text.strip()
    try:
        if stripped.startswith("{"):
            rows = json.loads(stripped)["edges"]
        else:
            rows = [
                line.split()
                for line in stripped.splitlines()
                if line.strip() and not line.lstrip().startswith("#")
            ]
        edges = tuple((int(u), int(v), int(j)) for u, v, j in rows)
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise ParameterError(f"cannot parse edge set: {exc}") from exc
    if not edges:
        raise ParameterError("edge set is empty")
    try:
        return EdgeSet(edges=edges)
    except ValidationError as exc:
        raise ParameterError(f"invalid edge set: {exc.errors()[0]['msg']}") from exc


def read_edge_set(path: str | Path) -> EdgeSet:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ArtifactIOError(f"cannot read edge set '{path}': {exc}") from exc
    return parse_edge_set(text)


def validate_edge_set(es: EdgeSet, params: ModelParams, t: int) -> None:
    if es.max_vertex > t:
        raise ParameterError(f"edge set uses vertex {es.max_vertex} beyond t={t}")
    if any(j > params.m for _, _, j in es.edges):
        raise ParameterError(f"edge labels must lie in 1..{params.m}")
    if any(count > params.m for count in es.out_degrees().values()):
        raise ParameterError(f"a sender exceeds out-degree m={params.m}")


def log_embedding_probability(es: EdgeSet, params: ModelParams, t: int) -> float:
    validate_edge_set(es, params, t)
    profile = MomentProfile.from_edges(es)
    total = 0.0
    for vertex, (a, b) in profile.exponents.items():
        if vertex == 1:
            # psi_1 = 1; nothing is older than vertex 1, so b_1 = 0
            if b > 0:
                return -math.inf
            continue
        alpha, beta = beta_shapes(params, vertex)
        total += log_beta_moment(alpha, float(beta), a, b)
    return total


def exact_embedding_probability(es: EdgeSet, params: ModelParams, t: int) -> float:
    return math.exp(log_embedding_probability(es, params, t))


def label_multiplicity(h: OrderedSubgraph, m: int) -> int:
    """Injective label choices: prod over positions of m (m-1) ... (m - d_out + 1)."""
    return math.prod(math.perm(m, d_out) for d_out in h.out_degrees())


def edge_set_for(h: OrderedSubgraph, vertices: tuple[int, ...]) -> EdgeSet:
    """One labeled realisation of ``h`` on increasing ``vertices`` (labels 1, 2, ... per sender)."""
    if len(vertices) != h.k or any(b <= a for a, b in zip(vertices, vertices[1:])):
        raise ParameterError(f"need {h.k} strictly increasing vertices, got {vertices}")
    next_label: Counter = Counter()
    edges = []
    for source, target in h.edges:
        sender = vertices[source - 1]
        next_label[sender] += 1
        edges.append((vertices[target - 1], sender, next_label[sender]))
    return EdgeSet(edges=tuple(edges))


def expected_count_on_tuple(
    h: OrderedSubgraph, params: ModelParams, t: int, vertices: tuple[int, ...]
) -> float:
    """E[labeled copies of ``h`` on the fixed vertices]."""
    multiplicity = label_multiplicity(h, params.m)
    if multiplicity == 0:
        return 0.0
    return multiplicity * exact_embedding_probability(edge_set_for(h, vertices), params, t)


@dataclass(frozen=True)
class BoundReport:
    tuples: int
    min_ratio: float
    max_ratio: float

    @property
    def spread(self) -> float:
        return self.max_ratio / self.min_ratio

    @property
    def bounded(self) -> bool:
        return 0.0 < self.min_ratio and math.isfinite(self.max_ratio)

    def to_dict(self) -> dict[str, Any]:
        return {
            "tuples": self.tuples,
            "min_ratio": self.min_ratio,
            "max_ratio": self.max_ratio,
            "spread": self.spread,
            "bounded": self.bounded,
        }


def power_law_profile(es: EdgeSet, chi: float) -> float:
    """prod over edges of u^(χ-1) v^(-χ)."""
    return math.exp(
        sum((chi - 1.0) * math.log(u) - chi * math.log(v) for u, v, _ in es.edges)
    )


def geometric_tuples(k: int, t: int, factor: int = 2, start: int = 1) -> list[tuple[int, ...]]:
    """Tuples ``(u, factor·u, factor²·u, ...)`` fitting in ``[1, t]``."""
    tuples = []
    u = start
    while u * factor ** (k - 1) <= t:
        tuples.append(tuple(u * factor**i for i in range(k)))
        u += 1
    return tuples


def embedding_bound_check(
    h: OrderedSubgraph,
    params: ModelParams,
    t: int,
    grid: list[tuple[int, ...]],
) -> BoundReport:
    """Range of exact probability over the power-law profile across ``grid``."""
    if not grid:
        raise ParameterError("the vertex tuple grid is empty")
    chi = params.chi()
    ratios = []
    for vertices in grid:
        es = edge_set_for(h, vertices)
        ratios.append(exact_embedding_probability(es, params, t) / power_law_profile(es, chi))
    return BoundReport(tuples=len(ratios), min_ratio=min(ratios), max_ratio=max(ratios))


def all_increasing_tuples(k: int, t: int) -> list[tuple[int, ...]]:
    return list(combinations(range(1, t + 1), k))
