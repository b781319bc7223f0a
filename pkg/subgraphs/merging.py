"""Unions of two overlapping copies of a subgraph."""

from collections import Counter
from itertools import combinations, permutations, product

from utils.errors import SizeLimitError
from utils.logger import Logger

from .canonical import canonical_form, from_canonical
from .digraph import UnorderedDigraph

MERGE_MAX_K = 6


def _shared_choices(first: Counter, second: Counter) -> list[tuple[tuple, list[int]]]:
    """Per overlapping pair: how many of its parallel edges the copies hold in common."""
    overlap = sorted(pair for pair in second if first.get(pair, 0) > 0)
    return [(pair, list(range(min(first[pair], second[pair]) + 1))) for pair in overlap]


def merge_copies(h: UnorderedDigraph) -> list[UnorderedDigraph]:
    """All isomorphism-distinct unions of two distinct copies of ``h`` that overlap.

    The second copy is placed by a partial injective map of its vertices onto
    the first copy's vertices; unmapped vertices are fresh. On a vertex pair
    carrying an edge of both copies they either hold the same edge or
    distinct parallel edges, and at least one edge must be held in common.
    Copies meeting only in vertices, or only in parallel edges, are not
    merges. Unions with exactly the edges of ``h`` are the same copy and are
    skipped. Positions play no role: ordered input is merged as a digraph.
    """
    if h.k > MERGE_MAX_K:
        raise SizeLimitError(f"merging is limited to k <= {MERGE_MAX_K}, got k={h.k}")

    k = h.k
    vertices = list(range(1, k + 1))
    first = Counter(h.edges)
    shapes: dict[tuple, UnorderedDigraph] = {}

    for size in range(2, k + 1):
        for domain in combinations(vertices, size):
            fresh = [v for v in vertices if v not in domain]
            for image in permutations(vertices, size):
                mapping = dict(zip(domain, image))
                mapping.update({v: k + 1 + i for i, v in enumerate(fresh)})
                second = Counter(h.relabel(mapping))
                choices = _shared_choices(first, second)
                if not choices:
                    continue
                pairs = [pair for pair, _ in choices]
                for shared in product(*(options for _, options in choices)):
                    if not any(shared):
                        continue
                    union = first + second
                    for pair, count in zip(pairs, shared):
                        union[pair] -= count
                    if sum(union.values()) <= h.edge_count:
                        continue
                    merged = UnorderedDigraph(
                        k=k + len(fresh),
                        edges=tuple(union.elements()),
                    )
                    key = canonical_form(merged)
                    if key not in shapes:
                        shapes[key] = from_canonical(key)

    Logger.debug("merge_copies | completed | k=%s shapes=%s", k, len(shapes))
    return [shapes[key] for key in sorted(shapes)]
