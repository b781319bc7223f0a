"""Exponents affine in χ with integer coefficients.

Every candidate of the optimisation is ``a + b·χ`` for integers ``a, b``;
with ``χ = (τ-2)/(τ-1)`` this is ``((a+b)τ - (a+2b)) / (τ-1)``.
"""

from fractions import Fraction

from pydantic.dataclasses import dataclass

from model import ModelParams
from utils.logger import Logger

TIE_TOLERANCE = 1e-9

# deltas already reported as tolerance-compared, one warning per process
_tolerance_warned: set[float] = set()

Scalar = Fraction | float


@dataclass(frozen=True, order=True)
class AffineExponent:
    constant: int
    chi: int

    def __add__(self, other: "AffineExponent") -> "AffineExponent":
        return AffineExponent(self.constant + other.constant, self.chi + other.chi)

    def shift(self, amount: int) -> "AffineExponent":
        return AffineExponent(self.constant + amount, self.chi)

    def at(self, chi: Scalar) -> Scalar:
        return self.constant + self.chi * chi

    def crossing(self, other: "AffineExponent") -> Fraction | None:
        """χ where the two lines meet, or None when parallel."""
        if self.chi == other.chi:
            return None
        return Fraction(other.constant - self.constant, self.chi - other.chi)

    def tau_numerator(self) -> tuple[int, int]:
        """(constant, τ-coefficient) of the numerator over (τ-1)."""
        return -(self.constant + 2 * self.chi), self.constant + self.chi

    def render_tau(self) -> str:
        if self.chi == 0:
            return str(self.constant)
        constant, slope = self.tau_numerator()
        return _over_tau_minus_one(constant, slope)

    def render_chi(self) -> str:
        if self.chi == 0:
            return str(self.constant)
        slope = {1: "χ", -1: "-χ"}.get(self.chi, f"{self.chi}χ")
        if self.constant == 0:
            return slope
        sign = "+" if self.chi > 0 else ""
        return f"{self.constant}{sign}{slope}"

    def __str__(self) -> str:
        return self.render_tau()


def _tau_term(slope: int) -> str:
    return {1: "τ", -1: "-τ"}.get(slope, f"{slope}τ")


def _over_tau_minus_one(constant: int, slope: int) -> str:
    if slope == 0:
        return f"{constant}/(τ-1)"
    if constant == 0:
        numerator = _tau_term(slope)
    elif slope > 0 and constant < 0:
        numerator = f"{_tau_term(slope)}{constant}"
    else:
        tau_part = _tau_term(slope)
        if not tau_part.startswith("-"):
            tau_part = "+" + tau_part
        numerator = f"{constant}{tau_part}"
    return f"({numerator})/(τ-1)"


def chi_to_tau(chi: Fraction) -> Fraction:
    return (2 - chi) / (1 - chi)


class ChiEvaluator:
    """Evaluates and compares affine exponents at one parameter point.

    Comparisons are exact when δ is a small-denominator rational and use an
    absolute tolerance otherwise.
    """

    def __init__(self, params: ModelParams) -> None:
        self.params = params
        exact = params.chi_exact()
        self.exact = exact is not None
        self.chi: Scalar = exact if exact is not None else params.chi()
        if not self.exact and params.delta not in _tolerance_warned:
            _tolerance_warned.add(params.delta)
            Logger.warn(
                "exponent ties use tolerance %s | delta=%s has no small rational form",
                TIE_TOLERANCE,
                params.delta,
            )

    def value(self, form: AffineExponent) -> Scalar:
        return form.at(self.chi)

    def equal(self, first: Scalar, second: Scalar) -> bool:
        if self.exact:
            return first == second
        return abs(float(first) - float(second)) <= TIE_TOLERANCE

    def greater(self, first: Scalar, second: Scalar) -> bool:
        if self.exact:
            return first > second
        return float(first) - float(second) > TIE_TOLERANCE


def upper_envelope(forms: list[AffineExponent]) -> list[tuple[Fraction, Fraction, AffineExponent]]:
    """Pieces ``(χ_lo, χ_hi, form)`` of max(forms) over χ in (0, 1)."""
    distinct = sorted(set(forms))
    points = {Fraction(0), Fraction(1)}
    for i, first in enumerate(distinct):
        for second in distinct[i + 1 :]:
            crossing = first.crossing(second)
            if crossing is not None and 0 < crossing < 1:
                points.add(crossing)
    grid = sorted(points)
    pieces: list[tuple[Fraction, Fraction, AffineExponent]] = []
    for lo, hi in zip(grid, grid[1:]):
        middle = (lo + hi) / 2
        best = max(distinct, key=lambda form: (form.at(middle), form.chi))
        if pieces and pieces[-1][2] == best:
            pieces[-1] = (pieces[-1][0], hi, best)
        else:
            pieces.append((lo, hi, best))
    return pieces
