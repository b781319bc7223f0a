from .attainability import (
    attainable_orderings,
    attainable_permutations,
    distinct_orderings,
    is_attainable,
)
from .canonical import canonical_form, from_canonical, is_isomorphic
from .digraph import OrderedSubgraph, UnorderedDigraph
from .library import named_subgraph, shape_names
from .merging import merge_copies
from .parsing import as_ordered, load_subgraph, parse_inline, parse_json

__all__ = [
    "OrderedSubgraph",
    "UnorderedDigraph",
    "as_ordered",
    "attainable_orderings",
    "attainable_permutations",
    "canonical_form",
    "distinct_orderings",
    "from_canonical",
    "is_attainable",
    "is_isomorphic",
    "load_subgraph",
    "merge_copies",
    "named_subgraph",
    "parse_inline",
    "parse_json",
    "shape_names",
]
