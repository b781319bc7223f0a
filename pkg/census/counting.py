"""Labeled subgraph counts on generated graphs.

A labeled occurrence of an ordered subgraph is an order-preserving vertex
map together with a choice of distinct labeled edges realising every
subgraph edge. Triangles have a vectorised counter; other attainable
subgraphs on up to five positions go through a backtracking search, with an
exhaustive oracle for tiny inputs.
"""

import time
from collections import Counter
from itertools import combinations, product
from math import perm
from typing import Any

import numpy as np
from pydantic.dataclasses import dataclass

from generation import PAGraph
from subgraphs import OrderedSubgraph, named_subgraph
from utils.errors import ParameterError, SizeLimitError
from utils.logger import Logger
from utils.types import CensusMode

GENERAL_MAX_K = 5
BRUTE_FORCE_MAX_K = 4
BRUTE_FORCE_MAX_T = 30
_COUNT_LIMIT = 2**64

TRIANGLE = named_subgraph("triangle")


@dataclass(frozen=True)
class CensusResult:
    subgraph_id: str
    t: int
    count: int
    elapsed: float
    mode: CensusMode

    def to_dict(self) -> dict[str, Any]:
        # elapsed is logged, not emitted, so artifacts stay reproducible
        return {
            "subgraph": self.subgraph_id,
            "t": self.t,
            "count": self.count,
            "mode": self.mode.value,
        }


def _checked(count: int) -> int:
    if count >= _COUNT_LIMIT:
        raise OverflowError(f"count {count} exceeds the 64-bit range")
    return count


def count_triangles(graph: PAGraph) -> int:
    """Labeled triangles: two distinct out-edges of w landing on u < v, times the edges v -> u."""
    m = graph.m
    if m < 2 or graph.t < 3:
        return 0
    rows = graph.targets[3:]
    total = 0
    for first, second in combinations(range(m), 2):
        a, b = rows[:, first], rows[:, second]
        distinct = a != b
        low = np.minimum(a, b)[distinct]
        high = np.maximum(a, b)[distinct]
        if low.size == 0:
            continue
        total += int(np.count_nonzero(graph.targets[high] == low[:, None]))
    return _checked(total)


class _GraphIndex:
    """Per-vertex out multiplicities and in-neighbour lists, built once per graph."""

    def __init__(self, graph: PAGraph) -> None:
        self.t = graph.t
        self.out: list[Counter] = [Counter() for _ in range(graph.t + 1)]
        incoming: list[set[int]] = [set() for _ in range(graph.t + 1)]
        for v in range(2, graph.t + 1):
            row = graph.targets[v].tolist()
            self.out[v] = Counter(row)
            for u in row:
                incoming[u].add(v)
        self.incoming = [sorted(senders) for senders in incoming]

    def multiplicity(self, v: int, u: int) -> int:
        return self.out[v].get(u, 0)


def _embedding_plan(h: OrderedSubgraph) -> list[tuple[int, int, bool]]:
    """Placement steps ``(position, anchor, via_out_edge)`` starting at the youngest position.

    Expansions along out-edges of placed positions come first; they have at
    most ``m`` candidates each.
    """
    placed = {h.k}
    plan: list[tuple[int, int, bool]] = []
    while len(placed) < h.k:
        step = None
        for source, target in h.edges:
            if source in placed and target not in placed:
                step = (target, source, True)
                break
        if step is None:
            for source, target in h.edges:
                if target in placed and source not in placed:
                    step = (source, target, False)
                    break
        assert step is not None, "subgraph must be connected"
        plan.append(step)
        placed.add(step[0])
    return plan


def _required(h: OrderedSubgraph) -> dict[int, list[tuple[int, int]]]:
    """For each position, the (other position, multiplicity) edge bundles it closes."""
    bundles = Counter(h.edges)
    required: dict[int, list[tuple[int, int]]] = {p: [] for p in range(1, h.k + 1)}
    for (source, target), count in bundles.items():
        required[source].append((target, count))
        required[target].append((source, count))
    return required


def count_ordered(graph: PAGraph, h: OrderedSubgraph) -> int:
    if h.k > GENERAL_MAX_K:
        raise SizeLimitError(f"general census supports k <= {GENERAL_MAX_K}, got k={h.k}")
    if any(source <= target for source, target in h.edges):
        raise ParameterError(f"edges of {h.to_inline()} must point to older positions")
    if max(h.out_degrees()) > graph.m:
        return 0

    index = _GraphIndex(graph)
    plan = _embedding_plan(h)
    bundles = Counter(h.edges)
    required = _required(h)
    phi: dict[int, int] = {}

    def consistent(position: int, vertex: int) -> bool:
        for other, assigned in phi.items():
            if assigned == vertex or (other < position) != (assigned < vertex):
                return False
        return True

    def label_weight(position: int, vertex: int) -> int:
        """Ways to realise the edge bundles between ``position`` and placed positions."""
        weight = 1
        for other, count in required[position]:
            if other not in phi:
                continue
            if (position, other) in bundles:
                available = index.multiplicity(vertex, phi[other])
            else:
                available = index.multiplicity(phi[other], vertex)
            if available < count:
                return 0
            weight *= perm(available, count)
        return weight

    def extend(step: int, weight: int) -> int:
        if step == len(plan):
            return weight
        position, anchor, via_out = plan[step]
        base = phi[anchor]
        candidates = index.out[base].keys() if via_out else index.incoming[base]
        total = 0
        for vertex in candidates:
            if not consistent(position, vertex):
                continue
            factor = label_weight(position, vertex)
            if factor == 0:
                continue
            phi[position] = vertex
            total += extend(step + 1, weight * factor)
            del phi[position]
        return total

    total = 0
    for root in range(h.k, graph.t + 1):
        phi[h.k] = root
        total += extend(0, 1)
        del phi[h.k]
    return _checked(total)


def brute_force_count(graph: PAGraph, h: OrderedSubgraph) -> int:
    """Exhaustive count over increasing vertex tuples and label assignments."""
    if graph.t > BRUTE_FORCE_MAX_T or h.k > BRUTE_FORCE_MAX_K:
        raise SizeLimitError(
            f"brute force supports t <= {BRUTE_FORCE_MAX_T} and k <= {BRUTE_FORCE_MAX_K}"
        )
    targets = graph.targets
    total = 0
    for chosen in combinations(range(1, graph.t + 1), h.k):
        options = []
        for source, target in h.edges:
            sender, receiver = chosen[source - 1], chosen[target - 1]
            if sender < 2:
                options.append([])
                continue
            options.append([j for j in range(graph.m) if targets[sender, j] == receiver])
        for labels in product(*options):
            used = [(chosen[source - 1], j) for (source, _), j in zip(h.edges, labels)]
            if len(set(used)) == len(used):
                total += 1
    return _checked(total)


def is_triangle(h: OrderedSubgraph) -> bool:
    return h.k == 3 and h.edges == TRIANGLE.edges


def census(
    graph: PAGraph,
    h: OrderedSubgraph,
    mode: CensusMode | None = None,
    subgraph_id: str | None = None,
) -> CensusResult:
    """Count with the requested mode, or the fastest legal one."""
    if mode is None:
        mode = CensusMode.TRIANGLE_FAST if is_triangle(h) else CensusMode.GENERAL
    if mode is CensusMode.TRIANGLE_FAST and not is_triangle(h):
        raise ParameterError("triangle-fast census only applies to the triangle")

    started = time.perf_counter()
    if mode is CensusMode.TRIANGLE_FAST:
        count = count_triangles(graph)
    elif mode is CensusMode.GENERAL:
        count = count_ordered(graph, h)
    else:
        count = brute_force_count(graph, h)
    elapsed = time.perf_counter() - started

    label = subgraph_id or h.to_inline()
    Logger.stage(
        "census", "completed", subgraph=label, t=graph.t, mode=mode.value,
        count=count, elapsed=f"{elapsed:.3f}s",
    )
    return CensusResult(subgraph_id=label, t=graph.t, count=count, elapsed=elapsed, mode=mode)
