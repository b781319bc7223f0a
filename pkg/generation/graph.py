"""The generated multigraph and its edge-list file format."""

from pathlib import Path
from typing import Any

import numpy as np
from pydantic import ConfigDict, model_validator
from pydantic.dataclasses import dataclass

from model import ModelParams
from utils.errors import ArtifactIOError, ParameterError
from utils.types import Provenance

EDGE_LIST_MAGIC = "PAM"


@dataclass(frozen=True, config=ConfigDict(arbitrary_types_allowed=True))
class PAGraph:
    """A preferential attachment graph at time ``t``.

    ``targets`` has shape ``(t + 1, m)``: row ``v`` lists the receivers of
    vertex ``v``'s edges in label order (column ``j - 1`` is edge label ``j``).
    Rows 0 and 1 are unused and hold zeros; vertex 1 sends no edges.
    """

    t: int
    params: ModelParams
    targets: np.ndarray
    provenance: Provenance

    @model_validator(mode="after")
    def _check_targets(self) -> "PAGraph":
        if self.t < 2:
            raise ValueError(f"t must be at least 2, got {self.t}")
        expected_shape = (self.t + 1, self.params.m)
        if self.targets.shape != expected_shape:
            raise ValueError(
                f"targets shape {self.targets.shape} != expected {expected_shape}"
            )
        if not np.all(self.targets[2] == 1):
            raise ValueError("vertex 2 must send all its edges to vertex 1")
        senders = np.arange(2, self.t + 1)[:, None]
        body = self.targets[2:]
        if np.any(body < 1) or np.any(body >= senders):
            raise ValueError("every edge must point to an older vertex")
        self.targets.setflags(write=False)
        return self

    @property
    def m(self) -> int:
        return self.params.m

    @property
    def edge_count(self) -> int:
        return self.params.m * (self.t - 1)

    def out_targets(self, v: int) -> np.ndarray:
        if v < 2:
            return self.targets[0, :0]
        return self.targets[v]

    def multiplicity(self, v: int, u: int) -> int:
        """Number of labeled edges from ``v`` to ``u``."""
        if v < 2 or u >= v:
            return 0
        return int(np.count_nonzero(self.targets[v] == u))

    def prefix(self, t_prefix: int) -> "PAGraph":
        """The graph as it was at time ``t_prefix``; growth makes truncation exact."""
        if not 2 <= t_prefix <= self.t:
            raise ParameterError(f"prefix time must lie in [2, {self.t}], got {t_prefix}")
        if t_prefix == self.t:
            return self
        return PAGraph(
            t=t_prefix,
            params=self.params,
            targets=self.targets[: t_prefix + 1],
            provenance=self.provenance,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "t": self.t,
            "params": self.params.to_dict(),
            "provenance": self.provenance.value,
            "edges": self.edge_count,
        }


def degree_sequence(graph: PAGraph) -> np.ndarray:
    """Total degrees D_1..D_t (index 0 holds vertex 1)."""
    in_degree = np.bincount(graph.targets[2:].ravel(), minlength=graph.t + 1)[1:]
    out_degree = np.full(graph.t, graph.m, dtype=np.int64)
    out_degree[0] = 0
    return in_degree + out_degree


def format_edge_list(graph: PAGraph) -> str:
    """Render ``graph`` as ``PAM t m delta provenance`` plus ``v j u`` lines."""
    lines = [
        f"{EDGE_LIST_MAGIC} {graph.t} {graph.m} {graph.params.delta!r} "
        f"{graph.provenance.value}"
    ]
    for v in range(2, graph.t + 1):
        row = graph.targets[v]
        lines.extend(f"{v} {j} {int(row[j - 1])}" for j in range(1, graph.m + 1))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> PAGraph:
    raw_lines = [line for line in text.splitlines() if line.strip()]
    if not raw_lines:
        raise ArtifactIOError("empty edge-list file")
    header = raw_lines[0].split()
    if len(header) != 5 or header[0] != EDGE_LIST_MAGIC:
        raise ArtifactIOError(f"malformed edge-list header: {raw_lines[0]!r}")
    try:
        t, m, delta = int(header[1]), int(header[2]), float(header[3])
        provenance = Provenance(header[4])
    except ValueError as exc:
        raise ArtifactIOError(f"malformed edge-list header: {exc}") from exc

    params = ModelParams(m=m, delta=delta)
    targets = np.zeros((t + 1, m), dtype=np.int64)
    expected = m * (t - 1)
    body = raw_lines[1:]
    if len(body) != expected:
        raise ArtifactIOError(f"expected {expected} edge lines, found {len(body)}")
    for line_no, line in enumerate(body, start=2):
        parts = line.split()
        if len(parts) != 3:
            raise ArtifactIOError(f"line {line_no}: expected 'v j u', got {line!r}")
        v, j, u = (int(part) for part in parts)
        if not (2 <= v <= t and 1 <= j <= m):
            raise ArtifactIOError(f"line {line_no}: edge slot ({v}, {j}) out of range")
        targets[v, j - 1] = u
    try:
        return PAGraph(t=t, params=params, targets=targets, provenance=provenance)
    except ValueError as exc:
        raise ArtifactIOError(f"edge list violates graph invariants: {exc}") from exc


def write_edge_list(graph: PAGraph, path: str | Path) -> Path:
    target = Path(path)
    try:
        target.write_text(format_edge_list(graph), encoding="utf-8")
    except OSError as exc:
        raise ArtifactIOError(f"cannot write graph to '{target}': {exc}") from exc
    return target


def read_edge_list(path: str | Path) -> PAGraph:
    source = Path(path)
    try:
        text = source.read_text(encoding="utf-8")
    except OSError as exc:
        raise ArtifactIOError(f"cannot read graph from '{source}': {exc}") from exc
    return parse_edge_list(text)
