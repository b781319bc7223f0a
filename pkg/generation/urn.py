"""Pólya-urn construction of the preferential attachment graph.

Vertex ``k >= 2`` gets a latent strength ``psi[k] ~ Beta(m+δ, m(2k-3)+(k-1)δ)``
and ``psi[1] = 1``. The strengths cut [0, 1] into intervals
``I_k = [S_{k-1}, S_k)`` with ``S_k = prod_{h=k+1}^{t} (1 - psi[h])``; edge
``j`` of vertex ``v`` lands in the interval containing a uniform point of
``[0, S_{v-1}]``. Given the strengths all edges are independent.

Strengths come from one vectorised ``Generator.beta`` call on the seed's PCG64
stream, followed by the ``(t-1) x m`` uniforms.
"""

import bisect
import csv
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import ConfigDict, model_validator
from pydantic.dataclasses import dataclass

from model import ModelParams, Seed
from utils.errors import ArtifactIOError, ParameterError
from utils.logger import Logger
from utils.types import Provenance

from .graph import PAGraph

_TINY = np.finfo(np.float64).tiny
_BELOW_ONE = np.nextafter(1.0, 0.0)


def beta_shapes(params: ModelParams, k: np.ndarray | int) -> tuple[float, Any]:
    """Shapes (α, β_k) of ψ_k for k >= 2."""
    alpha = params.m + params.delta
    beta = params.m * (2 * np.asarray(k) - 3) + (np.asarray(k) - 1) * params.delta
    return alpha, beta


@dataclass(frozen=True, config=ConfigDict(arbitrary_types_allowed=True))
class UrnRealization:
    """Latent strengths ``psi[1..t]`` and interval endpoints ``S[0..t]``.

    Index 0 of ``psi`` is unused and holds 0.
    """

    psi: np.ndarray
    S: np.ndarray
    params: ModelParams

    @model_validator(mode="after")
    def _check_arrays(self) -> "UrnRealization":
        if self.psi.shape != self.S.shape or self.psi.ndim != 1:
            raise ValueError("psi and S must be 1-d arrays of equal length t+1")
        if self.psi[1] != 1.0:
            raise ValueError("psi[1] must equal 1")
        if self.S[0] != 0.0 or self.S[-1] != 1.0:
            raise ValueError("S must run from S[0]=0 to S[t]=1")
        self.psi.setflags(write=False)
        self.S.setflags(write=False)
        return self

    @property
    def t(self) -> int:
        return len(self.psi) - 1

    def interval(self, k: int) -> tuple[float, float]:
        return float(self.S[k - 1]), float(self.S[k])


def endpoints_from_strengths(psi: np.ndarray) -> np.ndarray:
    """S[0..t] from psi[0..t] by one backward pass in log space."""
    t = len(psi) - 1
    S = np.empty(t + 1, dtype=np.float64)
    S[0] = 0.0
    S[t] = 1.0
    if t >= 2:
        log_keep = np.log1p(-psi[2:])
        # suffix[i] = sum over h = i+2..t of log(1 - psi[h])
        suffix = np.cumsum(log_keep[::-1])[::-1]
        S[1:t] = np.exp(suffix)
    return S


def draw_strengths(params: ModelParams, t: int, rng: np.random.Generator) -> np.ndarray:
    psi = np.zeros(t + 1, dtype=np.float64)
    psi[1] = 1.0
    if t >= 2:
        alpha, beta = beta_shapes(params, np.arange(2, t + 1))
        draws = rng.beta(np.full(t - 1, alpha), beta)
        # log1p(-psi) must stay finite
        psi[2:] = np.clip(draws, _TINY, _BELOW_ONE)
    return psi


def draw_urn(params: ModelParams, t: int, seed: Seed) -> tuple[UrnRealization, np.random.Generator]:
    if t < 2:
        raise ParameterError(f"t must be at least 2, got {t}")
    rng = seed.generator()
    psi = draw_strengths(params, t, rng)
    urn = UrnRealization(psi=psi, S=endpoints_from_strengths(psi), params=params)
    return urn, rng


def attach_from_urn(urn: UrnRealization, rng: np.random.Generator) -> PAGraph:
    """Place every edge of the graph given the urn's strengths."""
    params, t, m = urn.params, urn.t, urn.params.m
    S = urn.S
    reach = S[1:t][:, None]  # S[v-1] for v = 2..t
    points = rng.random((t - 1, m)) * reach
    targets = np.zeros((t + 1, m), dtype=np.int64)
    located = np.searchsorted(S, points, side="right")
    ceiling = np.arange(1, t)[:, None]  # v - 1
    targets[2:] = np.clip(located, 1, ceiling)
    return PAGraph(t=t, params=params, targets=targets, provenance=Provenance.URN)


def generate_urn(params: ModelParams, t: int, seed: Seed) -> tuple[PAGraph, UrnRealization]:
    urn, rng = draw_urn(params, t, seed)
    graph = attach_from_urn(urn, rng)
    Logger.stage("generate_urn", "completed", t=t, m=params.m, delta=params.delta)
    return graph, urn


def interval_lookup(S: np.ndarray | list[float], u: float) -> int:
    """The vertex ``k`` with ``S[k-1] <= u < S[k]``."""
    if not 0.0 <= u < 1.0:
        raise ParameterError(f"lookup point must lie in [0, 1), got {u}")
    return bisect.bisect_right(S, u)


def dump_urn_csv(urn: UrnRealization, path: str | Path) -> Path:
    """Write ``k,psi,S`` rows for k = 1..t."""
    target = Path(path)
    try:
        with target.open("w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle)
            writer.writerow(["k", "psi", "S"])
            for k in range(1, urn.t + 1):
                writer.writerow([k, repr(float(urn.psi[k])), repr(float(urn.S[k]))])
    except OSError as exc:
        raise ArtifactIOError(f"cannot write urn dump to '{target}': {exc}") from exc
    return target
