"""Which orderings of a digraph can occur in the model."""

import networkx as nx

from env import settings
from utils.errors import SizeLimitError

from .digraph import OrderedSubgraph, UnorderedDigraph


def is_attainable(h: OrderedSubgraph, m: int) -> bool:
    """Every edge points from a younger to an older position and no out-degree exceeds m."""
    if any(source <= target for source, target in h.edges):
        return False
    return max(h.out_degrees()) <= m


def attainable_permutations(g: UnorderedDigraph, m: int) -> list[tuple[int, ...]]:
    """Every attainable position assignment of ``g``; entry ``v-1`` is the position of vertex ``v``.

    Attainable orderings are the topological sorts of ``g`` read backwards
    (sources are younger, so they get larger positions). A permutation left
    out is not attainable.
    """
    if g.k > settings.PAM_MAX_ORDER_K:
        raise SizeLimitError(
            f"ordering enumeration is limited to k <= {settings.PAM_MAX_ORDER_K}, got k={g.k}"
        )
    if max(g.out_degrees()) > m:
        return []
    simple = nx.DiGraph(g.to_networkx())
    if not nx.is_directed_acyclic_graph(simple):
        return []

    found = []
    for order in nx.all_topological_sorts(simple):
        position = {vertex: g.k - index for index, vertex in enumerate(order)}
        found.append(tuple(position[v] for v in range(1, g.k + 1)))
    return sorted(found)


def attainable_orderings(g: UnorderedDigraph, m: int) -> list[OrderedSubgraph]:
    """One ordered subgraph per attainable permutation, in permutation order.

    Permutations related by an automorphism of ``g`` yield equal subgraphs;
    ``distinct_orderings`` drops the repeats.
    """
    return [
        OrderedSubgraph(k=g.k, edges=g.relabel(list(perm))) for perm in attainable_permutations(g, m)
    ]


def distinct_orderings(g: UnorderedDigraph, m: int) -> list[OrderedSubgraph]:
    """Attainable ordered subgraphs with automorphic repeats removed, sorted by edge tuple."""
    seen = {h.edges: h for h in attainable_orderings(g, m)}
    return [seen[key] for key in sorted(seen)]
