"""Canonical form of small directed multigraphs for isomorphism dedup.

Vertices are first split into classes by (out-degree, in-degree, sorted
neighbour degree signatures); only relabelings that keep classes in their
sorted slots are searched, and the lexicographically smallest sorted edge
tuple wins.
"""

from collections import defaultdict
from itertools import permutations, product

from utils.errors import SizeLimitError

from .digraph import UnorderedDigraph

CANONICAL_MAX_K = 12

CanonicalKey = tuple[int, tuple[tuple[int, int], ...]]


def _signatures(g: UnorderedDigraph) -> list[tuple]:
    out_deg = g.out_degrees()
    in_deg = g.in_degrees()
    base = [(out_deg[v], in_deg[v]) for v in range(g.k)]
    successors: dict[int, list] = defaultdict(list)
    predecessors: dict[int, list] = defaultdict(list)
    for source, target in g.edges:
        successors[source].append(base[target - 1])
        predecessors[target].append(base[source - 1])
    return [
        (base[v - 1], tuple(sorted(successors[v])), tuple(sorted(predecessors[v])))
        for v in range(1, g.k + 1)
    ]


def canonical_form(g: UnorderedDigraph) -> CanonicalKey:
    if g.k > CANONICAL_MAX_K:
        raise SizeLimitError(f"canonical form is limited to k <= {CANONICAL_MAX_K}, got k={g.k}")
    signatures = _signatures(g)
    classes: dict[tuple, list[int]] = defaultdict(list)
    for vertex, signature in enumerate(signatures, start=1):
        classes[signature].append(vertex)
    ordered_classes = [classes[key] for key in sorted(classes)]

    slots: list[list[int]] = []
    next_label = 1
    for members in ordered_classes:
        slots.append(list(range(next_label, next_label + len(members))))
        next_label += len(members)

    best: tuple[tuple[int, int], ...] | None = None
    for choice in product(*(permutations(slot) for slot in slots)):
        mapping: dict[int, int] = {}
        for members, labels in zip(ordered_classes, choice):
            mapping.update(zip(members, labels))
        candidate = tuple(sorted(g.relabel(mapping)))
        if best is None or candidate < best:
            best = candidate
    assert best is not None
    return g.k, best


def is_isomorphic(first: UnorderedDigraph, second: UnorderedDigraph) -> bool:
    if first.k != second.k or first.edge_count != second.edge_count:
        return False
    return canonical_form(first) == canonical_form(second)


def from_canonical(key: CanonicalKey) -> UnorderedDigraph:
    k, edges = key
    return UnorderedDigraph(k=k, edges=edges)
