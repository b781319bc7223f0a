"""Text formats for subgraphs.

Inline: ``"2>1,3>1,3>2"`` lists ``source>target`` pairs; ``k`` is the largest
id. JSON: ``{"k": 3, "edges": [[2, 1], [3, 1], [3, 2]]}``. For ordered
subgraphs the ids are π-positions. A ``--subgraph`` argument may also name
a shape from the library.
"""

import json
import re
from pathlib import Path

from pydantic import ValidationError

from utils.errors import ArtifactIOError, SubgraphFormatError
from utils.types import Edge

from .digraph import OrderedSubgraph, UnorderedDigraph
from .library import named_subgraph, shape_names

_INLINE_EDGE = re.compile(r"^\s*(\d+)\s*>\s*(\d+)\s*$")


def parse_inline_edges(text: str) -> list[Edge]:
    edges: list[Edge] = []
    for chunk in text.split(","):
        if not chunk.strip():
            continue
        match = _INLINE_EDGE.match(chunk)
        if match is None:
            raise SubgraphFormatError(f"cannot parse edge '{chunk.strip()}' (expected 's>t')")
        edges.append((int(match.group(1)), int(match.group(2))))
    if not edges:
        raise SubgraphFormatError("inline subgraph has no edges")
    return edges


def _build(k: int, edges: list[Edge], ordered: bool) -> UnorderedDigraph:
    cls = OrderedSubgraph if ordered else UnorderedDigraph
    try:
        return cls(k=k, edges=tuple(edges))
    except ValidationError as exc:
        raise SubgraphFormatError(f"invalid subgraph: {exc.errors()[0]['msg']}") from exc


def parse_inline(text: str, ordered: bool = False) -> UnorderedDigraph:
    edges = parse_inline_edges(text)
    k = max(max(edge) for edge in edges)
    return _build(k, edges, ordered)


def parse_json(text: str, ordered: bool = False) -> UnorderedDigraph:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SubgraphFormatError(f"subgraph JSON is malformed: {exc}") from exc
    if not isinstance(payload, dict) or "edges" not in payload:
        raise SubgraphFormatError("subgraph JSON needs an 'edges' list")
    try:
        edges = [(int(s), int(t)) for s, t in payload["edges"]]
    except (TypeError, ValueError) as exc:
        raise SubgraphFormatError(f"edges must be [source, target] pairs: {exc}") from exc
    if not edges:
        raise SubgraphFormatError("subgraph JSON has no edges")
    k = int(payload.get("k", max(max(edge) for edge in edges)))
    return _build(k, edges, ordered or bool(payload.get("ordered", False)))


def load_subgraph(source: str, ordered: bool = False) -> UnorderedDigraph:
    """Resolve a library name, an inline edge list, or a JSON file path."""
    raw = source.strip()
    if raw in shape_names():
        shape = named_subgraph(raw)
        return shape if ordered else shape.unordered()
    if ">" in raw and not raw.endswith(".json"):
        return parse_inline(raw, ordered)
    path = Path(raw)
    if path.suffix == ".json" or path.exists():
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ArtifactIOError(f"cannot read subgraph file '{path}': {exc}") from exc
        return parse_json(text, ordered)
    raise SubgraphFormatError(
        f"'{source}' is neither a shape name, an inline edge list, nor a JSON file"
    )


def as_ordered(graph: UnorderedDigraph) -> OrderedSubgraph:
    if isinstance(graph, OrderedSubgraph):
        return graph
    return OrderedSubgraph(k=graph.k, edges=graph.edges)
