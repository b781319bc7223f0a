from .params import ModelParams, derive_chi, derive_tau
from .seed import Seed

__all__ = [
    "ModelParams",
    "Seed",
    "derive_chi",
    "derive_tau",
]
