import math
from itertools import combinations

import numpy as np
import pytest

from generation import generate_urn
from model import ModelParams, Seed
from subgraphs import named_subgraph
from theory import (
    EdgeSet,
    asymptotic_triangle_expectation,
    beta_moment,
    brute_force_triangle_expectation,
    edge_set_for,
    embedding_bound_check,
    exact_embedding_probability,
    exact_triangle_expectation,
    expected_count_on_tuple,
    geometric_tuples,
    label_multiplicity,
    log_embedding_probability,
    parse_edge_set,
    read_edge_set,
    survival_log_products,
    triangle_constant,
)
from utils.errors import ArtifactIOError, ParameterError

TRIANGLE = named_subgraph("triangle")


def test_beta_moment_small_orders():
    assert beta_moment(2.0, 2.0, 1, 1) == pytest.approx(0.2)
    assert beta_moment(2.0, 3.0, 0, 0) == 1.0
    assert beta_moment(1.0, 1.0, 2, 0) == pytest.approx(1 / 3)


def test_beta_moment_long_products_use_gamma():
    direct = math.prod((3.0 + i) / (7.0 + i) for i in range(80))
    assert beta_moment(3.0, 4.0, 80, 0) == pytest.approx(direct, rel=1e-9)


@pytest.mark.parametrize(("alpha", "beta", "a", "b"), [(0.0, 1.0, 1, 0), (1.0, -1.0, 0, 1), (1.0, 1.0, -1, 0)])
def test_beta_moment_rejects_bad_arguments(alpha, beta, a, b):
    with pytest.raises(ParameterError):
        beta_moment(alpha, beta, a, b)


def test_exact_triangles_on_three_vertices(tau_three):
    # 4 label choices times E[psi_2 (1 - psi_2)] with psi_2 ~ Beta(2, 2)
    assert exact_triangle_expectation(tau_three, 3) == pytest.approx(0.8)


@pytest.mark.parametrize("delta", [-1.5, -1.0, 0.0, 0.5, 3.0])
@pytest.mark.parametrize("t", [3, 4, 7, 15])
def test_exact_matches_triple_sum(delta, t):
    params = ModelParams(m=2, delta=delta)
    assert exact_triangle_expectation(params, t) == pytest.approx(
        brute_force_triangle_expectation(params, t), rel=1e-10
    )


@pytest.mark.parametrize(("m", "delta"), [(3, 0.5), (2, 0.0)])
@pytest.mark.parametrize("t", [3, 10, 50, 200])
def test_exact_matches_triple_sum_at_larger_sizes(m, delta, t):
    params = ModelParams(m=m, delta=delta)
    assert exact_triangle_expectation(params, t) == pytest.approx(
        brute_force_triangle_expectation(params, t), rel=1e-9
    )


def test_exact_matches_sum_of_embedding_probabilities():
    params = ModelParams(m=3, delta=-1.0)
    t = 9
    total = sum(
        expected_count_on_tuple(TRIANGLE, params, t, triple)
        for triple in combinations(range(1, t + 1), 3)
    )
    assert exact_triangle_expectation(params, t) == pytest.approx(total, rel=1e-10)


@pytest.mark.parametrize("delta", [-1.0, 0.0, 2.5])
def test_survival_products_agree(delta):
    params = ModelParams(m=3, delta=delta)
    gamma = survival_log_products(params, 500)
    direct = survival_log_products(params, 500, method="direct")
    np.testing.assert_allclose(gamma, direct, rtol=1e-9, atol=1e-12)
    assert gamma[0] == gamma[1] == 0.0
    # P_1 = 1, then every factor is below one
    assert np.all(np.diff(gamma)[1:] < 0)


def test_unknown_product_method(tau_three):
    with pytest.raises(ParameterError):
        survival_log_products(tau_three, 10, method="series")


def test_triangles_need_two_edges_per_vertex():
    with pytest.raises(ParameterError):
        exact_triangle_expectation(ModelParams(m=1, delta=0.0), 10)
    with pytest.raises(ParameterError):
        exact_triangle_expectation(ModelParams(m=2, delta=0.0), 2)


def test_asymptotic_regimes():
    t = 1e6
    log_t = math.log(t)
    assert asymptotic_triangle_expectation(ModelParams(m=3, delta=0.0), t) == pytest.approx(
        3 * 2 * 4 / 48 * log_t**3
    )
    positive = ModelParams(m=2, delta=1.0)
    assert asymptotic_triangle_expectation(positive, math.exp(10)) == pytest.approx(288.0)
    negative = ModelParams(m=2, delta=-1.0)
    assert asymptotic_triangle_expectation(negative, t) == pytest.approx(
        triangle_constant(negative) * t ** (1 / 3) * log_t
    )


def test_triangle_constant():
    # m^2 (m-1) (m+δ)^2 (m+δ+1) / (δ^2 (2m+δ)) at m=2, δ=1
    assert triangle_constant(ModelParams(m=2, delta=1.0)) == pytest.approx(28.8)
    with pytest.raises(ParameterError):
        triangle_constant(ModelParams(m=2, delta=0.0))


def test_negative_delta_constant_is_carried_by_old_vertices():
    params = ModelParams(m=2, delta=-1.0)
    # vertices 1 and 2 each add 4 chi/gamma K with K = 1/Gamma(1/3); later ones add more
    first_vertex = 4 * (1 / 3) * 3 / math.gamma(1 / 3)
    assert triangle_constant(params) > 2 * first_vertex


@pytest.mark.parametrize("delta", [-1.0, 0.0, 1.0])
def test_exact_approaches_asymptotic(delta):
    params = ModelParams(m=2, delta=delta)
    deviations = [
        abs(exact_triangle_expectation(params, t) / asymptotic_triangle_expectation(params, t) - 1)
        for t in (10**3, 10**4, 10**5, 10**6)
    ]
    assert all(later < earlier for earlier, later in zip(deviations, deviations[1:]))


@pytest.mark.parametrize(("m", "delta"), [(2, -1.0), (3, -1.5)])
def test_second_order_expansion_for_negative_delta(m, delta):
    params = ModelParams(m=m, delta=delta)
    deviations = [
        abs(exact_triangle_expectation(params, t) / asymptotic_triangle_expectation(params, t, terms=2) - 1)
        for t in (10**4, 10**6)
    ]
    assert deviations[1] < deviations[0]
    assert deviations[1] < 0.05


def test_second_order_needs_negative_delta():
    with pytest.raises(ParameterError):
        asymptotic_triangle_expectation(ModelParams(m=2, delta=1.0), 1e4, terms=2)
    with pytest.raises(ParameterError):
        asymptotic_triangle_expectation(ModelParams(m=2, delta=-1.0), 1e4, terms=3)


def test_single_edge_probabilities():
    params = ModelParams(m=2, delta=0.0)
    # vertex 2 can only attach to vertex 1
    assert exact_embedding_probability(EdgeSet(edges=((1, 2, 1),)), params, 5) == pytest.approx(1.0)
    # psi_2 ~ Beta(m+δ, m+δ) is symmetric
    assert exact_embedding_probability(EdgeSet(edges=((1, 3, 1),)), params, 5) == pytest.approx(0.5)
    assert exact_embedding_probability(EdgeSet(edges=((2, 3, 2),)), params, 5) == pytest.approx(0.5)


def test_log_probability_matches_triangle_weight(tau_three):
    es = edge_set_for(TRIANGLE, (1, 2, 3))
    assert es.edges == ((1, 2, 1), (1, 3, 1), (2, 3, 2))
    assert math.exp(log_embedding_probability(es, tau_three, 3)) == pytest.approx(0.2)


def test_edge_sets_are_validated():
    params = ModelParams(m=2, delta=0.0)
    with pytest.raises(ParameterError):
        exact_embedding_probability(EdgeSet(edges=((1, 6, 1),)), params, 5)
    with pytest.raises(ParameterError):
        exact_embedding_probability(EdgeSet(edges=((1, 3, 3),)), params, 5)
    with pytest.raises(ParameterError):
        parse_edge_set("1 3 1\n2 3 1")
    with pytest.raises(ParameterError):
        parse_edge_set("3 1 1")
    with pytest.raises(ParameterError):
        parse_edge_set("")


def test_edge_set_formats(tmp_path):
    lines = parse_edge_set("# triangle on 1, 2, 3\n1 2 1\n1 3 1\n2 3 2\n")
    as_json = parse_edge_set('{"edges": [[2, 3, 2], [1, 2, 1], [1, 3, 1]]}')
    assert lines == as_json
    path = tmp_path / "edges.txt"
    path.write_text("1 2 1\n", encoding="utf-8")
    assert read_edge_set(path).edges == ((1, 2, 1),)
    with pytest.raises(ArtifactIOError):
        read_edge_set(tmp_path / "missing.txt")


def test_label_multiplicity():
    assert label_multiplicity(TRIANGLE, 3) == 18
    assert label_multiplicity(TRIANGLE, 2) == 4
    assert label_multiplicity(named_subgraph("star-out"), 2) == 0


def test_embedding_probability_stays_within_constant_factors():
    params = ModelParams(m=2, delta=-1.0)
    report = embedding_bound_check(TRIANGLE, params, 4096, geometric_tuples(3, 4096))
    assert report.tuples == 1024
    assert report.bounded
    assert report.spread < 50
    assert report.to_dict()["bounded"] is True


def test_bound_check_needs_tuples(tau_three):
    with pytest.raises(ParameterError):
        embedding_bound_check(TRIANGLE, tau_three, 10, [])


def _random_edge_sets(count, t, m, rng):
    edge_sets = []
    while len(edge_sets) < count:
        size = int(rng.integers(1, 4))
        slots = set()
        edges = []
        for _ in range(size):
            v = int(rng.integers(2, t + 1))
            j = int(rng.integers(1, m + 1))
            if (v, j) in slots:
                continue
            slots.add((v, j))
            edges.append((int(rng.integers(1, v)), v, j))
        edge_sets.append(EdgeSet(edges=tuple(edges)))
    return edge_sets


@pytest.mark.slow
@pytest.mark.parametrize("delta", [-1.0, 0.0, 1.0])
def test_embedding_probability_matches_urn_frequencies(delta):
    params = ModelParams(m=2, delta=delta)
    t, samples = 30, 100_000
    edge_sets = _random_edge_sets(20, t, params.m, np.random.default_rng(30))
    hits = np.zeros(len(edge_sets))
    for stream in range(samples):
        graph, _ = generate_urn(params, t, Seed(value=55, stream=stream))
        for i, es in enumerate(edge_sets):
            hits[i] += all(graph.targets[v, j - 1] == u for u, v, j in es.edges)
    for es, count in zip(edge_sets, hits):
        p = exact_embedding_probability(es, params, t)
        stderr = max(np.sqrt(p * (1 - p) / samples), 1 / samples)
        assert abs(count / samples - p) < 5 * stderr, es.edges
