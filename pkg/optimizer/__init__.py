from .atlas import AtlasRow, atlas, atlas_row, exponent_phases, tau_boundaries
from .catalog import CatalogEntry, catalog_entry, connected_dag_shapes
from .exponent import (
    ExponentReport,
    beta_coefficients,
    beta_values,
    candidate_values,
    degree_classes,
    solve_B,
    solve_B_unordered,
)
from .symbolic import AffineExponent, ChiEvaluator, chi_to_tau, upper_envelope

__all__ = [
    "AffineExponent",
    "AtlasRow",
    "CatalogEntry",
    "ChiEvaluator",
    "ExponentReport",
    "atlas",
    "atlas_row",
    "beta_coefficients",
    "beta_values",
    "candidate_values",
    "catalog_entry",
    "chi_to_tau",
    "connected_dag_shapes",
    "degree_classes",
    "exponent_phases",
    "solve_B",
    "solve_B_unordered",
    "tau_boundaries",
    "upper_envelope",
]
