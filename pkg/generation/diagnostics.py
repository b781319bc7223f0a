"""Statistical diagnostics on urn realizations and degree sequences."""

import math

import numpy as np

from utils.errors import ParameterError

from .urn import UrnRealization


def position_deviation(urn: UrnRealization) -> float:
    """max_i |S_i - (i/t)^χ| over i = 1..t; shrinks to 0 as t grows."""
    t = urn.t
    chi = urn.params.chi()
    i = np.arange(1, t + 1, dtype=np.float64)
    return float(np.max(np.abs(urn.S[1:] - (i / t) ** chi)))


def strength_envelope(urn: UrnRealization, k: np.ndarray) -> np.ndarray:
    """(log k)^2 / ((2m+δ) k)."""
    scale = 2 * urn.params.m + urn.params.delta
    return np.log(k) ** 2 / (scale * k)


def strength_excess_fraction(urn: UrnRealization, k_min: int) -> float:
    """Fraction of k in [k_min, t] whose strength exceeds the envelope."""
    if not 2 <= k_min <= urn.t:
        raise ParameterError(f"k_min must lie in [2, {urn.t}], got {k_min}")
    k = np.arange(k_min, urn.t + 1, dtype=np.float64)
    above = urn.psi[k_min:] > strength_envelope(urn, k)
    return float(np.mean(above))


def max_strength_after(urn: UrnRealization, k_min: int = 2) -> float:
    """Largest ψ_k over k >= k_min; stays bounded away from 1 with high probability."""
    if not 2 <= k_min <= urn.t:
        raise ParameterError(f"k_min must lie in [2, {urn.t}], got {k_min}")
    return float(np.max(urn.psi[k_min:]))


def tail_exponent(degrees: np.ndarray, d_min: int) -> float:
    """Discrete maximum-likelihood estimate of the degree exponent τ.

    Uses the continuous approximation with the half-integer shift:
    ``1 + n / sum(log(d / (d_min - 1/2)))`` over degrees ``d >= d_min``.
    """
    if d_min < 1:
        raise ParameterError(f"d_min must be positive, got {d_min}")
    tail = np.asarray(degrees, dtype=np.float64)
    tail = tail[tail >= d_min]
    if tail.size == 0:
        raise ParameterError(f"no degree reaches d_min={d_min}")
    log_sum = float(np.sum(np.log(tail / (d_min - 0.5))))
    if log_sum <= 0.0:
        return math.inf
    return 1.0 + tail.size / log_sum
