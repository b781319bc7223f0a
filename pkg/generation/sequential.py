"""Sequential preferential attachment: one edge at a time."""

import math

import numpy as np

from model import ModelParams, Seed
from utils.errors import ParameterError
from utils.logger import Logger
from utils.types import Provenance

from .graph import PAGraph
from .sampling import SAMPLERS, WeightSampler


def attachment_denominator(params: ModelParams, v: int, j: int) -> float:
    """Normaliser for vertex ``v``'s ``j``-th edge: 2m(v-2) + (j-1) + (v-1)δ."""
    return 2 * params.m * (v - 2) + (j - 1) + (v - 1) * params.delta


def generate_sequential(
    params: ModelParams,
    t: int,
    seed: Seed,
    sampler: str = "fenwick",
) -> PAGraph:
    """Grow a graph to ``t`` vertices by the sequential attachment rule.

    Vertex ``v``'s ``j``-th edge goes to ``i < v`` with probability
    ``(D_i + δ) / (2m(v-2) + (j-1) + (v-1)δ)``, degrees being updated after
    every single edge. Vertex 2 sends all ``m`` edges to vertex 1.
    """
    if t < 2:
        raise ParameterError(f"t must be at least 2, got {t}")
    if sampler not in SAMPLERS:
        raise ParameterError(f"unknown sampler '{sampler}'")

    m, delta = params.m, params.delta
    rng = seed.generator()
    uniforms = rng.random(m * max(t - 2, 0)).tolist()
    targets = np.zeros((t + 1, m), dtype=np.int64)
    targets[2, :] = 1

    weights: WeightSampler = SAMPLERS[sampler](t)
    weights.add(1, m + delta)
    weights.add(2, m + delta)

    draw = 0
    for v in range(3, t + 1):
        expected = attachment_denominator(params, v, 1)
        assert math.isclose(weights.total, expected, rel_tol=1e-9, abs_tol=1e-9), (
            f"weight total {weights.total} != {expected} at v={v}"
        )
        row = targets[v]
        for j in range(m):
            u = uniforms[draw] * weights.total
            draw += 1
            # rounding can land on a not-yet-inserted slot
            target = min(weights.locate(u), v - 1)
            row[j] = target
            weights.add(target, 1.0)
        weights.add(v, m + delta)

    Logger.stage("generate_sequential", "completed", t=t, m=m, delta=delta, sampler=sampler)
    return PAGraph(t=t, params=params, targets=targets, provenance=Provenance.SEQUENTIAL)
