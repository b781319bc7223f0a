"""Expected number of labeled triangles.

The exact expectation is

    m²(m-1) Σ_{u<v<w} E[ψ_u²] · E[ψ_v(1-ψ_v)] / E[(1-ψ_v)²] · Π_{k=u+1}^{w-1} E[(1-ψ_k)²]

evaluated in O(t) with suffix sums. Leading-order asymptotics have three
regimes: ``C log t`` for δ > 0, ``m(m-1)(m+1)/48 log³ t`` for δ = 0 and
``C t^γ log t`` for δ < 0 with γ = (3-τ)/(τ-1). Corrections are of relative
order 1/log t in every regime, so finite-t ratios approach 1 slowly.
"""

import math

import numpy as np
from scipy.special import digamma, gammaln

from model import ModelParams
from utils.errors import ParameterError

from .moments import beta_moment

SERIES_CUTOFF = 200_000


def _require_triangles(params: ModelParams, t: int | None = None, t_min: int = 3) -> None:
    if params.m < 2:
        raise ParameterError("triangles need m >= 2")
    if t is not None and t < t_min:
        raise ParameterError(f"t must be at least {t_min}, got {t}")


def _shapes(params: ModelParams, t: int) -> tuple[float, np.ndarray]:
    k = np.arange(t + 1, dtype=np.float64)
    alpha = params.m + params.delta
    beta = params.m * (2 * k - 3) + (k - 1) * params.delta
    return alpha, beta


def survival_log_products(params: ModelParams, t: int, method: str = "gamma") -> np.ndarray:
    """log P_n with P_n = Π_{k=2}^{n} E[(1-ψ_k)²] for n = 0..t (P_0 = P_1 = 1).

    ``gamma`` writes the product as a ratio of Gamma functions; ``direct``
    sums the logs of the individual factors.
    """
    log_p = np.zeros(t + 1, dtype=np.float64)
    if t < 2:
        return log_p
    alpha, beta = _shapes(params, t)
    if method == "direct":
        b = beta[2:]
        factors = np.log(b) + np.log(b + 1) - np.log(alpha + b) - np.log(alpha + b + 1)
        log_p[2:] = np.cumsum(factors)
        return log_p
    if method != "gamma":
        raise ParameterError(f"unknown product method '{method}'")
    # β_k + e = c (k - x_e) with c = 2m+δ and x_e = (3m+δ-e)/c
    c = 2 * params.m + params.delta
    d = 3 * params.m + params.delta
    n = np.arange(2, t + 1, dtype=np.float64)

    def gamma_chain(offset: float) -> np.ndarray:
        x = (d - offset) / c
        return gammaln(n + 1 - x) - gammaln(2 - x)

    log_p[2:] = (
        gamma_chain(0.0) + gamma_chain(1.0) - gamma_chain(alpha) - gamma_chain(alpha + 1.0)
    )
    return log_p


def _triangle_weights(params: ModelParams, t: int) -> tuple[np.ndarray, np.ndarray]:
    """E[ψ_u²] for u = 0..t (E[ψ_1²] = 1) and E[ψ_v(1-ψ_v)]/E[(1-ψ_v)²] = α/(β_v+1)."""
    alpha, beta = _shapes(params, t)
    second = np.zeros(t + 1, dtype=np.float64)
    ratio = np.zeros(t + 1, dtype=np.float64)
    second[1] = 1.0
    b = beta[2:]
    second[2:] = alpha * (alpha + 1) / ((alpha + b) * (alpha + b + 1))
    ratio[2:] = alpha / (b + 1)
    return second, ratio


def label_choices(m: int) -> int:
    return m * m * (m - 1)


def exact_triangle_expectation(params: ModelParams, t: int) -> float:
    _require_triangles(params, t)
    second, ratio = _triangle_weights(params, t)
    log_p = survival_log_products(params, t)
    p = np.exp(log_p)

    # W_v = Σ_{n=v}^{t-1} P_n
    tail_p = p.copy()
    tail_p[t] = 0.0
    w_sum = np.cumsum(tail_p[::-1])[::-1]
    # V_u = Σ_{v=u+1}^{t-1} R_v W_v
    rw = ratio * w_sum
    rw[:2] = 0.0
    v_sum = np.cumsum(rw[::-1])[::-1]

    u = np.arange(1, t - 1)
    total = float(np.sum(second[u] * v_sum[u + 1] * np.exp(-log_p[u])))
    return label_choices(params.m) * total


def brute_force_triangle_expectation(params: ModelParams, t: int) -> float:
    """Triple sum over u < v < w with factors taken from Beta moments; O(t³)."""
    _require_triangles(params, t)
    alpha = params.m + params.delta

    def beta_k(k: int) -> float:
        return params.m * (2 * k - 3) + (k - 1) * params.delta

    second = [0.0, 1.0] + [beta_moment(alpha, beta_k(k), 2, 0) for k in range(2, t + 1)]
    ratio = [0.0, 0.0] + [
        beta_moment(alpha, beta_k(k), 1, 1) / beta_moment(alpha, beta_k(k), 0, 2)
        for k in range(2, t + 1)
    ]
    keep = [0.0, 0.0] + [beta_moment(alpha, beta_k(k), 0, 2) for k in range(2, t + 1)]

    total = 0.0
    for u in range(1, t - 1):
        for v in range(u + 1, t):
            before_v = 1.0
            for k in range(u + 1, v):
                before_v *= keep[k]
            running = before_v * keep[v]
            for w in range(v + 1, t + 1):
                total += second[u] * ratio[v] * running
                running *= keep[w]
    return label_choices(params.m) * total


def _log_survival_limit(params: ModelParams) -> float:
    """log K where P_n ~ K n^(-2χ)."""
    c = 2 * params.m + params.delta
    d = 3 * params.m + params.delta
    alpha = params.m + params.delta

    def start(offset: float) -> float:
        return float(gammaln(2 - (d - offset) / c))

    return start(alpha) + start(alpha + 1.0) - start(0.0) - start(1.0)


def _small_vertex_sums(params: ModelParams, cutoff: int = SERIES_CUTOFF) -> tuple[float, float]:
    """Σ_u E[ψ_u²] K/P_u over u ≥ 1, plain and weighted by digamma(u+1-x) with x = (3m+δ-1)/(2m+δ).

    Only meaningful for δ < 0, where terms decay like u^(-1-γ) with
    γ = -δ/(2m+δ). Terms past ``cutoff`` are replaced by their integrals.
    """
    c = 2 * params.m + params.delta
    alpha = params.m + params.delta
    gamma = -params.delta / c
    second, _ = _triangle_weights(params, cutoff)
    log_p = survival_log_products(params, cutoff)
    u = np.arange(1, cutoff + 1, dtype=np.float64)
    terms = second[1:] * np.exp(_log_survival_limit(params) - log_p[1:])
    shifts = digamma(u + 1 - (3 * params.m + params.delta - 1) / c)

    amplitude = alpha * (alpha + 1) / c**2
    decay = cutoff ** (-gamma)
    plain_tail = amplitude * decay / gamma
    log_tail = amplitude * decay * (math.log(cutoff) / gamma + 1 / gamma**2)
    return float(terms.sum()) + plain_tail, float((terms * shifts).sum()) + log_tail


def triangle_constant(params: ModelParams) -> float:
    """Leading constant C of ``C log t`` (δ > 0) and ``C t^γ log t`` (δ < 0).

    For δ > 0 it is m²(m-1)(m+δ)²(m+δ+1) / (δ²(2m+δ)). For δ < 0 the sum is
    carried by the oldest vertices and C = m²(m-1) χ S / γ, with S the
    convergent series of ``_small_vertex_sums``.
    """
    m, delta = params.m, params.delta
    if delta == 0:
        raise ParameterError("the constant is undefined at delta = 0")
    alpha = m + delta
    c = 2 * m + delta
    if delta > 0:
        return label_choices(m) * alpha**2 * (alpha + 1) / (c * delta**2)
    plain, _ = _small_vertex_sums(params)
    return label_choices(m) * params.chi() * plain / (-delta / c)


def asymptotic_triangle_expectation(params: ModelParams, t: float, terms: int = 1) -> float:
    """Leading-order expected triangle count; ``terms=2`` adds the t^γ correction for δ < 0."""
    _require_triangles(params)
    if t <= 1:
        raise ParameterError(f"t must exceed 1, got {t}")
    if terms not in (1, 2):
        raise ParameterError(f"terms must be 1 or 2, got {terms}")
    m, delta = params.m, params.delta
    if terms == 2 and delta >= 0:
        raise ParameterError("the second-order term is only available for delta < 0")
    log_t = math.log(t)
    if delta == 0:
        return m * (m - 1) * (m + 1) / 48 * log_t**3
    if delta > 0:
        return triangle_constant(params) * log_t
    gamma = -delta / (2 * m + delta)
    if terms == 1:
        return triangle_constant(params) * t**gamma * log_t
    chi = params.chi()
    plain, shifted = _small_vertex_sums(params)
    bracket = chi * plain * (log_t - 1 / gamma) - chi * shifted
    return label_choices(m) * t**gamma * bracket / gamma
