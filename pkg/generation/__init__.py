from .diagnostics import (
    max_strength_after,
    position_deviation,
    strength_excess_fraction,
    tail_exponent,
)
from .graph import (
    PAGraph,
    degree_sequence,
    format_edge_list,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from .sequential import attachment_denominator, generate_sequential
from .urn import (
    UrnRealization,
    beta_shapes,
    dump_urn_csv,
    endpoints_from_strengths,
    generate_urn,
    interval_lookup,
)

__all__ = [
    "PAGraph",
    "UrnRealization",
    "attachment_denominator",
    "beta_shapes",
    "degree_sequence",
    "dump_urn_csv",
    "endpoints_from_strengths",
    "format_edge_list",
    "generate_sequential",
    "generate_urn",
    "interval_lookup",
    "max_strength_after",
    "parse_edge_list",
    "position_deviation",
    "read_edge_list",
    "strength_excess_fraction",
    "tail_exponent",
    "write_edge_list",
]
