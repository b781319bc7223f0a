"""Small directed multigraphs: unordered shapes and π-ordered subgraphs."""

from collections import Counter
from typing import Any

import networkx as nx
from pydantic import field_validator, model_validator
from pydantic.dataclasses import dataclass

from utils.types import Edge


@dataclass(frozen=True)
class UnorderedDigraph:
    """A connected directed multigraph on vertex ids ``1..k``.

    Parallel edges are repeated pairs. Edges are kept sorted so that equal
    edge multisets compare equal.
    """

    k: int
    edges: tuple[Edge, ...]

    @field_validator("edges", mode="after")
    @classmethod
    def _sort_edges(cls, value: tuple[Edge, ...]) -> tuple[Edge, ...]:
        return tuple(sorted((int(s), int(t)) for s, t in value))

    @model_validator(mode="after")
    def _check_structure(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if not self.edges:
            raise ValueError("a subgraph needs at least one edge")
        for source, target in self.edges:
            if not (1 <= source <= self.k and 1 <= target <= self.k):
                raise ValueError(f"edge ({source}, {target}) outside vertex range 1..{self.k}")
            if source == target:
                raise ValueError(f"self-loop at vertex {source}")
        if not nx.is_weakly_connected(self.to_networkx()):
            raise ValueError("underlying undirected graph must be connected")
        return self

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def out_degrees(self) -> list[int]:
        """Out-degrees indexed 0..k-1 for vertices 1..k, with multiplicity."""
        counts = Counter(source for source, _ in self.edges)
        return [counts[v] for v in range(1, self.k + 1)]

    def in_degrees(self) -> list[int]:
        counts = Counter(target for _, target in self.edges)
        return [counts[v] for v in range(1, self.k + 1)]

    def pair_counts(self) -> Counter:
        return Counter(self.edges)

    def relabel(self, mapping: dict[int, int] | list[int]) -> tuple[Edge, ...]:
        """Edges with every vertex ``v`` replaced by ``mapping[v]``.

        A list mapping is indexed by ``v - 1``.
        """
        if isinstance(mapping, list):
            return tuple((mapping[s - 1], mapping[t - 1]) for s, t in self.edges)
        return tuple((mapping[s], mapping[t]) for s, t in self.edges)

    def to_networkx(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(1, self.k + 1))
        graph.add_edges_from(self.edges)
        return graph

    def to_inline(self) -> str:
        return ",".join(f"{s}>{t}" for s, t in self.edges)

    def to_dict(self) -> dict[str, Any]:
        return {"k": self.k, "edges": [list(edge) for edge in self.edges]}


@dataclass(frozen=True)
class OrderedSubgraph(UnorderedDigraph):
    """A digraph whose vertex ids are π-positions: 1 is the oldest vertex."""

    def unordered(self) -> UnorderedDigraph:
        return UnorderedDigraph(k=self.k, edges=self.edges)

    def to_dict(self) -> dict[str, Any]:
        payload = super().to_dict()
        payload["ordered"] = True
        return payload
