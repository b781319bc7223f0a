"""Model parameters of the preferential attachment model."""

from fractions import Fraction
from typing import Annotated, Any

from pydantic import Field, model_validator
from pydantic.dataclasses import dataclass

# largest denominator accepted when recovering an exact δ from its float
_RATIONAL_DENOMINATOR_LIMIT = 10**6


@dataclass(frozen=True)
class ModelParams:
    """Edges per new vertex ``m`` and the attachment offset ``delta``.

    τ and χ are derived on demand and never stored.
    """

    m: Annotated[int, Field(ge=1)]
    delta: float

    @model_validator(mode="after")
    def _check_delta(self) -> "ModelParams":
        if not self.delta > -self.m:
            raise ValueError(f"delta must exceed -m, got m={self.m} delta={self.delta}")
        return self

    def tau(self) -> float:
        return 3.0 + self.delta / self.m

    def chi(self) -> float:
        return (self.m + self.delta) / (2 * self.m + self.delta)

    def delta_exact(self) -> Fraction | None:
        """δ as a small-denominator rational when the float is one, else None."""
        candidate = Fraction(self.delta).limit_denominator(_RATIONAL_DENOMINATOR_LIMIT)
        if float(candidate) == self.delta:
            return candidate
        return None

    def chi_exact(self) -> Fraction | None:
        delta = self.delta_exact()
        if delta is None:
            return None
        return (self.m + delta) / (2 * self.m + delta)

    def to_dict(self) -> dict[str, Any]:
        return {"m": self.m, "delta": self.delta}


def derive_tau(params: ModelParams) -> float:
    """Degree exponent τ = 3 + δ/m."""
    return params.tau()


def derive_chi(params: ModelParams) -> float:
    """χ = (m+δ)/(2m+δ) = (τ-2)/(τ-1)."""
    return params.chi()
