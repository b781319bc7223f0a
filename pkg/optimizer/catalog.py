"""Programmatic catalog of connected DAG shapes on a few vertices.

Every DAG has a labelling with all edges pointing from larger to smaller
labels, so subsets of those pairs cover all shapes; connected ones are
deduplicated by canonical form. Three vertices give 4 shapes and four
vertices give 24.
"""

from functools import lru_cache
from itertools import combinations

from pydantic import ValidationError
from pydantic.dataclasses import dataclass

from subgraphs import UnorderedDigraph, canonical_form, from_canonical
from utils.errors import SizeLimitError

CATALOG_MAX_K = 5


@dataclass(frozen=True)
class CatalogEntry:
    graph_id: str
    graph: UnorderedDigraph


@lru_cache(maxsize=None)
def connected_dag_shapes(k: int) -> tuple[CatalogEntry, ...]:
    if not 2 <= k <= CATALOG_MAX_K:
        raise SizeLimitError(f"catalog covers 2 <= k <= {CATALOG_MAX_K}, got k={k}")
    pairs = [(j, i) for j in range(2, k + 1) for i in range(1, j)]
    keys = set()
    for size in range(k - 1, len(pairs) + 1):
        for chosen in combinations(pairs, size):
            try:
                graph = UnorderedDigraph(k=k, edges=chosen)
            except ValidationError:
                continue
            keys.add(canonical_form(graph))
    ordered = sorted(keys, key=lambda key: (len(key[1]), key))
    return tuple(
        CatalogEntry(graph_id=f"k{k}-{index:02d}", graph=from_canonical(key))
        for index, key in enumerate(ordered, start=1)
    )


def catalog_entry(graph_id: str) -> CatalogEntry:
    try:
        k = int(graph_id.split("-")[0].removeprefix("k"))
    except ValueError:
        raise KeyError(f"malformed catalog id '{graph_id}'") from None
    for entry in connected_dag_shapes(k):
        if entry.graph_id == graph_id:
            return entry
    raise KeyError(f"unknown catalog id '{graph_id}'")
