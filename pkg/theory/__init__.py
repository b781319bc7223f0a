from .embedding import (
    BoundReport,
    EdgeSet,
    MomentProfile,
    all_increasing_tuples,
    edge_set_for,
    embedding_bound_check,
    exact_embedding_probability,
    expected_count_on_tuple,
    geometric_tuples,
    label_multiplicity,
    log_embedding_probability,
    parse_edge_set,
    power_law_profile,
    read_edge_set,
)
from .moments import beta_moment, log_beta_moment
from .triangles import (
    asymptotic_triangle_expectation,
    brute_force_triangle_expectation,
    exact_triangle_expectation,
    survival_log_products,
    triangle_constant,
)

__all__ = [
    "BoundReport",
    "EdgeSet",
    "MomentProfile",
    "all_increasing_tuples",
    "asymptotic_triangle_expectation",
    "beta_moment",
    "brute_force_triangle_expectation",
    "edge_set_for",
    "embedding_bound_check",
    "exact_embedding_probability",
    "exact_triangle_expectation",
    "expected_count_on_tuple",
    "geometric_tuples",
    "label_multiplicity",
    "log_beta_moment",
    "log_embedding_probability",
    "parse_edge_set",
    "power_law_profile",
    "read_edge_set",
    "survival_log_products",
    "triangle_constant",
]
