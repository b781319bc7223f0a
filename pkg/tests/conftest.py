"""Shared fixtures for the test suite."""

import numpy as np
import pytest

from generation import PAGraph, generate_urn
from model import ModelParams, Seed
from utils.logger import Logger
from utils.types import Provenance

# bind the stderr handler before any CliRunner swaps the streams
Logger.get_logger()


@pytest.fixture
def tau_two_and_half() -> ModelParams:
    """τ = 2.5, χ = 1/3."""
    return ModelParams(m=2, delta=-1.0)


@pytest.fixture
def tau_three() -> ModelParams:
    return ModelParams(m=2, delta=0.0)


@pytest.fixture
def small_graph() -> PAGraph:
    """t = 3, m = 2: vertex 3 sends one edge to 1 and one to 2."""
    targets = np.zeros((4, 2), dtype=np.int64)
    targets[2] = [1, 1]
    targets[3] = [1, 2]
    return PAGraph(t=3, params=ModelParams(m=2, delta=0.0), targets=targets, provenance=Provenance.URN)


@pytest.fixture
def urn_graph() -> PAGraph:
    graph, _ = generate_urn(ModelParams(m=3, delta=-1.0), 24, Seed(value=2024))
    return graph
