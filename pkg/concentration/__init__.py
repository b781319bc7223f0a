from .criterion import ConcentrationVerdict, MergedShape, classify
from .experiments import VarianceRow, VarianceTable, variance_experiment

__all__ = [
    "ConcentrationVerdict",
    "MergedShape",
    "VarianceRow",
    "VarianceTable",
    "classify",
    "variance_experiment",
]
