import json
from itertools import combinations, permutations

import networkx as nx
import pytest

from optimizer import connected_dag_shapes
from subgraphs import (
    OrderedSubgraph,
    UnorderedDigraph,
    attainable_orderings,
    attainable_permutations,
    canonical_form,
    distinct_orderings,
    is_attainable,
    is_isomorphic,
    load_subgraph,
    merge_copies,
    named_subgraph,
    parse_inline,
    parse_json,
    shape_names,
)
from utils.errors import SizeLimitError, SubgraphFormatError


def test_inline_format():
    g = parse_inline("2>1,3>1,3>2")
    assert g.k == 3
    assert g.edges == ((2, 1), (3, 1), (3, 2))
    assert g.to_inline() == "2>1,3>1,3>2"


@pytest.mark.parametrize("text", ["2-1", "2>1,4>3", "1>1", ""])
def test_malformed_inline_is_rejected(text):
    with pytest.raises(SubgraphFormatError):
        parse_inline(text)


def test_json_format_keeps_parallel_edges():
    g = parse_json(json.dumps({"k": 3, "edges": [[3, 1], [3, 1], [2, 1], [3, 2]]}), ordered=True)
    assert isinstance(g, OrderedSubgraph)
    assert g.pair_counts()[(3, 1)] == 2
    assert g.out_degrees() == [0, 1, 3]


def test_load_subgraph_accepts_names_inline_and_files(tmp_path):
    assert isinstance(load_subgraph("triangle", ordered=True), OrderedSubgraph)
    assert not isinstance(load_subgraph("triangle"), OrderedSubgraph)
    path = tmp_path / "wedge.json"
    path.write_text(json.dumps({"edges": [[2, 1], [3, 1]]}), encoding="utf-8")
    assert load_subgraph(str(path)).edges == ((2, 1), (3, 1))
    with pytest.raises(SubgraphFormatError):
        load_subgraph("not-a-shape")


def test_library_shapes_are_attainable_in_their_stored_order():
    for name in shape_names():
        h = named_subgraph(name)
        assert is_attainable(h, max(h.out_degrees())), name


def test_attainability_requires_old_targets_and_bounded_out_degree():
    triangle = named_subgraph("triangle")
    assert is_attainable(triangle, 2)
    assert not is_attainable(triangle, 1)
    reversed_edge = OrderedSubgraph(k=2, edges=((1, 2),))
    assert not is_attainable(reversed_edge, 5)


def test_triangle_has_a_single_attainable_ordering():
    orderings = attainable_orderings(parse_inline("2>1,3>1,3>2"), 2)
    assert [h.edges for h in orderings] == [((2, 1), (3, 1), (3, 2))]


def test_symmetric_orderings_are_listed_per_permutation():
    wedge = parse_inline("2>1,3>1")
    orderings = attainable_orderings(wedge, 1)
    assert len(orderings) == 2
    assert orderings[0].edges == orderings[1].edges
    assert [h.edges for h in distinct_orderings(wedge, 1)] == [((2, 1), (3, 1))]


def test_attainable_permutations_are_exhaustive():
    m = 2
    for entry in connected_dag_shapes(4):
        g = entry.graph
        found = attainable_permutations(g, m)
        assert len(found) == len(set(found))
        exhaustive = {
            perm
            for perm in permutations(range(1, g.k + 1))
            if is_attainable(OrderedSubgraph(k=g.k, edges=g.relabel(list(perm))), m)
        }
        assert set(found) == exhaustive, entry.graph_id


def test_out_degree_cap_removes_every_ordering():
    assert attainable_orderings(parse_inline("4>1,4>2,4>3"), 2) == []
    # the three leaves permute freely under the hub
    assert len(attainable_orderings(parse_inline("4>1,4>2,4>3"), 3)) == 6
    assert len(distinct_orderings(parse_inline("4>1,4>2,4>3"), 3)) == 1


def test_directed_cycle_is_not_attainable():
    cycle = UnorderedDigraph(k=3, edges=((1, 2), (2, 3), (3, 1)))
    assert attainable_orderings(cycle, 3) == []


def test_attainable_orderings_match_exhaustive_permutations():
    m = 3
    for entry in connected_dag_shapes(4):
        g = entry.graph
        found = {h.edges for h in attainable_orderings(g, m)}
        exhaustive = set()
        for perm in permutations(range(1, g.k + 1)):
            h = OrderedSubgraph(k=g.k, edges=g.relabel(list(perm)))
            if is_attainable(h, m):
                exhaustive.add(h.edges)
        assert found == exhaustive, entry.graph_id


def test_ordering_enumeration_is_guarded():
    long_path = UnorderedDigraph(k=11, edges=tuple((v + 1, v) for v in range(1, 11)))
    with pytest.raises(SizeLimitError):
        attainable_orderings(long_path, 1)


def test_canonical_form_is_invariant_under_relabeling():
    g = parse_inline("2>1,3>2,4>2,4>1")
    for perm in permutations(range(1, 5)):
        relabeled = UnorderedDigraph(k=4, edges=g.relabel(list(perm)))
        assert canonical_form(relabeled) == canonical_form(g)


def test_canonical_form_agrees_with_networkx_isomorphism():
    shapes = [entry.graph for entry in connected_dag_shapes(4)]
    for first, second in combinations(shapes, 2):
        expected = nx.is_isomorphic(first.to_networkx(), second.to_networkx())
        assert is_isomorphic(first, second) == expected
        assert not expected


def test_single_edge_has_no_merges():
    # two copies holding the same edge are the same copy
    assert merge_copies(parse_inline("2>1")) == []


def _is_simple(shape):
    return len(set(shape.edges)) == len(shape.edges)


def test_path_merges():
    merged = merge_copies(named_subgraph("path").unordered())
    simple = [shape for shape in merged if _is_simple(shape)]
    expected_simple = ["2>1,3>2,4>3", "2>1,3>2,2>4", "2>1,3>2,4>2", "2>1,3>2,1>3"]
    assert len(simple) == 4
    for inline in expected_simple:
        assert sum(is_isomorphic(shape, parse_inline(inline)) for shape in simple) == 1
    doubled = [shape for shape in merged if not _is_simple(shape)]
    assert len(doubled) == 2
    for inline in ["2>1,2>1,3>2", "2>1,3>2,3>2"]:
        assert sum(is_isomorphic(shape, parse_inline(inline)) for shape in doubled) == 1


def test_merges_share_an_edge():
    triangle = parse_inline("2>1,3>1,3>2")
    merged = merge_copies(triangle)
    # six edges would mean the copies share none
    assert all(shape.edge_count <= 5 for shape in merged)
    assert not any(is_isomorphic(shape, parse_inline("2>1,3>1,4>1,4>1,4>2,4>3")) for shape in merged)
    assert not any(
        is_isomorphic(shape, parse_inline("2>1,2>1,3>1,3>1,3>2,3>2")) for shape in merged
    )


def test_merged_triangles_are_distinct_and_larger():
    triangle = parse_inline("2>1,3>1,3>2")
    merged = merge_copies(triangle)
    assert merged
    for shape in merged:
        assert shape.edge_count > triangle.edge_count
        assert 3 <= shape.k <= 4
    for first, second in combinations(merged, 2):
        assert not nx.is_isomorphic(first.to_networkx(), second.to_networkx())


def test_hub_wedge_merges_include_the_five_leaf_shape():
    merged = merge_copies(named_subgraph("hub-wedge").unordered())
    target = named_subgraph("merged-wedge").unordered()
    assert any(is_isomorphic(shape, target) for shape in merged)


def test_merging_is_guarded():
    path = UnorderedDigraph(k=7, edges=tuple((v + 1, v) for v in range(1, 7)))
    with pytest.raises(SizeLimitError):
        merge_copies(path)
