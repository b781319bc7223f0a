"""Mixed moments of Beta variables, in log space."""

import math

from scipy.special import gammaln

from utils.errors import ParameterError

# below this many factors the moment is summed factor by factor
_DIRECT_FACTOR_LIMIT = 64


def log_beta_moment(alpha: float, beta: float, a: int, b: int) -> float:
    """log E[X^a (1-X)^b] for X ~ Beta(alpha, beta)."""
    if not (alpha > 0 and beta > 0):
        raise ParameterError(f"Beta shapes must be positive, got alpha={alpha} beta={beta}")
    if a < 0 or b < 0:
        raise ParameterError(f"moment orders must be non-negative, got a={a} b={b}")
    if a == 0 and b == 0:
        return 0.0
    if a + b <= _DIRECT_FACTOR_LIMIT:
        total = sum(math.log(alpha + i) for i in range(a))
        total += sum(math.log(beta + j) for j in range(b))
        total -= sum(math.log(alpha + beta + r) for r in range(a + b))
        return total
    return float(
        gammaln(alpha + a) - gammaln(alpha)
        + gammaln(beta + b) - gammaln(beta)
        - gammaln(alpha + beta + a + b) + gammaln(alpha + beta)
    )


def beta_moment(alpha: float, beta: float, a: int, b: int) -> float:
    """E[X^a (1-X)^b] = prod_{i<a}(α+i) prod_{j<b}(β+j) / prod_{r<a+b}(α+β+r)."""
    return math.exp(log_beta_moment(alpha, beta, a, b))
