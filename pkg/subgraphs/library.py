"""Named shapes, given in an attainable ordering (1 = oldest position)."""

from .digraph import OrderedSubgraph

_SHAPES: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "edge": (2, ((2, 1),)),
    # three vertices
    "triangle": (3, ((2, 1), (3, 1), (3, 2))),
    "wedge-in": (3, ((2, 1), (3, 1))),
    "path": (3, ((2, 1), (3, 2))),
    "wedge-out": (3, ((3, 1), (3, 2))),
    # four vertices
    "k4": (4, ((2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3))),
    "star-in": (4, ((2, 1), (3, 1), (4, 1))),
    "star-out": (4, ((4, 1), (4, 2), (4, 3))),
    "hub-wedge": (4, ((2, 1), (3, 2), (4, 2))),
    "square-adjacent": (4, ((2, 1), (3, 2), (4, 1), (4, 3))),
    "square-opposite": (4, ((2, 1), (3, 1), (4, 2), (4, 3))),
    "square-alternating": (4, ((3, 1), (3, 2), (4, 1), (4, 2))),
    "path4": (4, ((2, 1), (3, 2), (4, 3))),
    # union of two hub-wedges sharing the hub's out-edge
    "merged-wedge": (6, ((2, 1), (3, 2), (4, 2), (5, 2), (6, 2))),
}


def shape_names() -> list[str]:
    return sorted(_SHAPES)


def named_subgraph(name: str) -> OrderedSubgraph:
    try:
        k, edges = _SHAPES[name]
    except KeyError:
        raise KeyError(f"unknown shape '{name}'; known: {', '.join(shape_names())}") from None
    return OrderedSubgraph(k=k, edges=edges)
