import math
from fractions import Fraction

import pytest

from model import ModelParams
from optimizer import (
    AffineExponent,
    ChiEvaluator,
    atlas,
    beta_values,
    candidate_values,
    catalog_entry,
    connected_dag_shapes,
    exponent_phases,
    solve_B,
    solve_B_unordered,
    tau_boundaries,
)
from subgraphs import OrderedSubgraph, named_subgraph, parse_inline
from utils.errors import NotAttainableError, ParameterError, SizeLimitError
from utils.logger import Logger
from utils.types import DegreeClass

OLD, YOUNG, FREE = DegreeClass.OLD_HUB, DegreeClass.YOUNG_CONSTANT, DegreeClass.FREE

# τ = 2.25 and τ = 2.75 with m = 4, large enough for every 4-vertex shape
TAU_LOW = ModelParams(m=4, delta=-3.0)
TAU_HIGH = ModelParams(m=4, delta=-1.0)


@pytest.mark.parametrize(
    ("form", "rendered"),
    [
        (AffineExponent(1, -2), "(3-τ)/(τ-1)"),
        (AffineExponent(2, -2), "2/(τ-1)"),
        (AffineExponent(1, 0), "1"),
        (AffineExponent(2, -4), "(6-2τ)/(τ-1)"),
        (AffineExponent(1, -3), "(5-2τ)/(τ-1)"),
        (AffineExponent(0, 1), "(τ-2)/(τ-1)"),
    ],
)
def test_affine_exponent_renders_in_tau(form, rendered):
    assert form.render_tau() == rendered


def test_affine_exponent_value_matches_tau_rendering():
    params = ModelParams(m=3, delta=-1.0)
    tau, chi = params.tau(), params.chi()
    form = AffineExponent(2, -4)
    assert form.at(chi) == pytest.approx((6 - 2 * tau) / (tau - 1))


def test_triangle_beta_values(tau_two_and_half):
    beta = beta_values(named_subgraph("triangle"), tau_two_and_half)
    assert beta == pytest.approx([-4 / 3, -1.0, -2 / 3])
    assert sum(beta) == pytest.approx(-3.0)


def test_in_star_beta_values():
    params = ModelParams(m=3, delta=1.0)
    chi = params.chi()
    beta = beta_values(named_subgraph("star-in"), params)
    assert beta == pytest.approx([3 * chi - 3, -chi, -chi, -chi])


def test_beta_values_reject_unattainable_orderings(tau_two_and_half):
    with pytest.raises(ParameterError):
        beta_values(OrderedSubgraph(k=2, edges=((1, 2),)), tau_two_and_half)


def test_first_candidate_is_minus_the_edge_count():
    for name in ("triangle", "k4", "square-alternating", "merged-wedge"):
        h = named_subgraph(name)
        assert candidate_values(h)[0] == AffineExponent(-h.edge_count, 0)


def test_triangle_at_tau_two_and_half(tau_two_and_half):
    report = solve_B(named_subgraph("triangle"), tau_two_and_half)
    assert report.optimizers == (1, 2)
    assert report.exponent == pytest.approx(1 / 3)
    assert report.log_power == 1
    assert report.symbolic.render_tau() == "(3-τ)/(τ-1)"
    assert report.classes == (OLD, FREE, YOUNG)
    assert report.exact_ties


def test_triangle_at_tau_three_has_four_optimizers(tau_three):
    report = solve_B(named_subgraph("triangle"), tau_three)
    assert report.optimizers == (0, 1, 2, 3)
    assert report.exponent == pytest.approx(0.0)
    assert report.log_power == 3


def test_triangle_log_power_drops_back_above_tau_three():
    report = solve_B(named_subgraph("triangle"), ModelParams(m=2, delta=1.0))
    assert report.optimizers == (0, 3)
    assert report.exponent == pytest.approx(0.0)
    assert report.log_power == 1


def test_ties_use_a_tolerance_for_irrational_delta():
    params = ModelParams(m=2, delta=math.sqrt(2) - 2)
    report = solve_B(named_subgraph("triangle"), params)
    assert not report.exact_ties
    assert report.optimizers == (1, 2)


@pytest.mark.parametrize(
    ("inline", "exponent", "log_power", "symbolic"),
    [
        ("2>1,3>1,3>2", 1 / 3, 1, "(3-τ)/(τ-1)"),
        ("2>1,3>1", 4 / 3, 0, "2/(τ-1)"),
        ("2>1,3>2", 1.0, 0, "1"),
        ("3>1,3>2", 1.0, 0, "1"),
    ],
)
def test_three_vertex_shapes(tau_two_and_half, inline, exponent, log_power, symbolic):
    best, _ = solve_B_unordered(parse_inline(inline), tau_two_and_half)
    assert best.exponent == pytest.approx(exponent)
    assert best.log_power == log_power
    assert best.symbolic.render_tau() == symbolic


@pytest.mark.parametrize(
    ("name", "low", "high"),
    [
        ("star-in", ("3/(τ-1)", 0), ("3/(τ-1)", 0)),
        ("hub-wedge", ("2/(τ-1)", 0), ("2/(τ-1)", 0)),
        ("path4", ("1", 0), ("1", 0)),
        ("star-out", ("1", 0), ("1", 0)),
        ("square-adjacent", ("(3-τ)/(τ-1)", 2), ("(3-τ)/(τ-1)", 2)),
        ("square-opposite", ("(3-τ)/(τ-1)", 2), ("(3-τ)/(τ-1)", 2)),
        ("square-alternating", ("(6-2τ)/(τ-1)", 0), ("(6-2τ)/(τ-1)", 0)),
        ("k4", ("(5-2τ)/(τ-1)", 0), ("0", 0)),
    ],
)
def test_four_vertex_shapes(name, low, high):
    g = named_subgraph(name).unordered()
    for params, (symbolic, log_power) in ((TAU_LOW, low), (TAU_HIGH, high)):
        best, _ = solve_B_unordered(g, params)
        assert best.symbolic.render_tau() == symbolic
        assert best.log_power == log_power
        tau = params.tau()
        assert best.exponent == pytest.approx(best.symbolic.at(params.chi()))
        if symbolic == "3/(τ-1)":
            assert best.exponent == pytest.approx(3 / (tau - 1))


def test_in_star_at_tau_two_and_half(tau_two_and_half):
    report = solve_B(named_subgraph("star-in"), ModelParams(m=4, delta=-2.0))
    assert report.exponent == pytest.approx(2.0)
    assert solve_B(named_subgraph("hub-wedge"), tau_two_and_half).exponent == pytest.approx(4 / 3)


def test_square_adjacent_has_three_optimizers():
    report = solve_B(named_subgraph("square-adjacent"), TAU_LOW)
    assert report.optimizers == (1, 2, 3)
    assert report.classes == (OLD, FREE, FREE, YOUNG)


def test_young_constant_shapes():
    report = solve_B(named_subgraph("path4"), TAU_LOW)
    assert report.optimizers == (0,)
    assert report.classes == (YOUNG,) * 4


def test_k4_phase_transition():
    below = solve_B(named_subgraph("k4"), ModelParams(m=10, delta=-7.0))
    assert below.optimizers == (3,)
    assert below.exponent == pytest.approx(4 / 13)
    above = solve_B(named_subgraph("k4"), ModelParams(m=5, delta=-1.0))
    assert above.optimizers == (4,)
    assert above.exponent == pytest.approx(0.0)
    assert above.classes == (OLD,) * 4
    boundary = solve_B(named_subgraph("k4"), ModelParams(m=4, delta=-2.0))
    assert boundary.optimizers == (3, 4)
    assert boundary.log_power == 1


def test_unordered_solve_rejects_unattainable_shapes(tau_two_and_half):
    with pytest.raises(NotAttainableError):
        solve_B_unordered(parse_inline("4>1,4>2,4>3"), tau_two_and_half)


def test_unordered_solve_reports_every_ordering():
    g = parse_inline("2>1,3>2,4>2")
    best, reports = solve_B_unordered(g, TAU_LOW)
    assert len(reports) == 1
    assert best is reports[0]


def test_catalog_sizes():
    assert len(connected_dag_shapes(3)) == 4
    assert len(connected_dag_shapes(4)) == 24
    with pytest.raises(SizeLimitError):
        connected_dag_shapes(6)


def test_catalog_ids_resolve():
    entry = catalog_entry("k4-01")
    assert entry.graph.k == 4
    with pytest.raises(KeyError):
        catalog_entry("k4-99")


def test_k4_phase_boundary_is_tau_five_halves():
    g = named_subgraph("k4").unordered()
    pieces = exponent_phases(g, 3)
    assert [form for _, _, form in pieces] == [AffineExponent(1, -3), AffineExponent(0, 0)]
    assert tau_boundaries(g, 3) == [Fraction(5, 2)]


def test_triangle_phase_boundary_is_tau_three():
    assert tau_boundaries(named_subgraph("triangle").unordered(), 2) == [Fraction(3)]


def test_in_star_changes_regime_at_tau_four():
    assert tau_boundaries(named_subgraph("star-in").unordered(), 3) == [Fraction(4)]


def test_path_does_not_depend_on_tau():
    assert tau_boundaries(named_subgraph("path4").unordered(), 1) == []


def test_atlas_covers_the_catalog():
    rows = atlas(TAU_LOW)
    assert len(rows) == 28
    assert all(row.attainable for row in rows)
    k4_row = next(row for row in rows if row.k == 4 and row.edges.count(">") == 6)
    assert k4_row.depends_on_tau
    assert k4_row.tau_boundaries == ("5/2",)
    assert k4_row.exponent_symbolic == "(5-2τ)/(τ-1)"


def test_atlas_marks_unattainable_rows():
    rows = atlas(ModelParams(m=1, delta=0.0), sizes=(3,))
    by_edges = {row.edges.count(">"): row for row in rows}
    assert not by_edges[3].attainable
    assert by_edges[3].exponent is None


def test_atlas_is_independent_of_worker_count():
    serial = atlas(TAU_HIGH, sizes=(3,), workers=1)
    parallel = atlas(TAU_HIGH, sizes=(3,), workers=2)
    assert [row.to_dict() for row in serial] == [row.to_dict() for row in parallel]


def test_tolerance_warning_is_logged_once_per_delta(monkeypatch):
    warnings = []
    monkeypatch.setattr(Logger, "warn", lambda message, *args: warnings.append(args))
    params = ModelParams(m=2, delta=math.sqrt(2) - 1)
    first = ChiEvaluator(params)
    ChiEvaluator(params)
    assert not first.exact
    assert len(warnings) == 1
    ChiEvaluator(ModelParams(m=2, delta=math.sqrt(3) - 1))
    assert len(warnings) == 2
