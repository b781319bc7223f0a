import csv
import io
import json

import pytest
from click.testing import CliRunner

from census import count_triangles
from generation import read_edge_list
from main import cli


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _json(result) -> dict:
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


def test_predict_triangle(runner):
    payload = _json(
        runner.invoke(cli, ["predict", "--subgraph", "2>1,3>1,3>2", "--m", "2", "--delta=-1"])
    )
    results = payload["results"]
    assert results["exponent"] == pytest.approx(1 / 3)
    assert results["log_power"] == 1
    assert results["exponent_symbolic"] == "(3-τ)/(τ-1)"
    assert results["orderings"] == 1
    assert payload["config"]["command"] == "predict"
    assert "version" in payload


def test_predict_csv(runner):
    result = runner.invoke(
        cli, ["predict", "--subgraph", "k4", "--ordered", "--m", "5", "--delta=-1", "--format", "csv"]
    )
    assert result.exit_code == 0, result.output
    rows = list(csv.DictReader(io.StringIO(result.output)))
    assert len(rows) == 1
    assert float(rows[0]["exponent"]) == pytest.approx(0.0)


def test_triangles_exact(runner):
    payload = _json(runner.invoke(cli, ["triangles", "exact", "--m", "2", "--delta", "0", "--t", "3"]))
    assert payload["results"]["expectation"] == pytest.approx(0.8)


def test_triangles_asymptotic(runner):
    payload = _json(
        runner.invoke(cli, ["triangles", "asymptotic", "--m", "2", "--delta", "1", "--t", "1000"])
    )
    assert payload["results"]["expectation"] > 0


def test_generate_is_reproducible(runner, tmp_path):
    paths = [tmp_path / name for name in ("a.txt", "b.txt", "c.txt")]
    for path, seed in zip(paths, ("7", "7", "8")):
        result = runner.invoke(
            cli,
            ["generate", "--m", "2", "--delta=-1", "--t", "60", "--seed", seed, "--out", str(path)],
        )
        assert result.exit_code == 0, result.output
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert paths[0].read_bytes() != paths[2].read_bytes()


def test_missing_seed_is_a_config_error(runner):
    result = runner.invoke(cli, ["generate", "--m", "2", "--delta", "0", "--t", "10"])
    assert result.exit_code == 15
    assert "ConfigError" in result.output


def test_invalid_delta_is_a_parameter_error(runner):
    result = runner.invoke(cli, ["predict", "--subgraph", "triangle", "--m", "2", "--delta=-2"])
    assert result.exit_code == 10
    assert "ParameterError" in result.output


def test_unknown_subgraph(runner):
    result = runner.invoke(cli, ["predict", "--subgraph", "no-such-shape", "--m", "2", "--delta", "0"])
    assert result.exit_code == 11
    assert "SubgraphFormatError" in result.output


def test_config_file_supplies_defaults(runner, tmp_path):
    config = tmp_path / "run.cfg"
    config.write_text("# triangle check\nm = 2\ndelta = -1\nt = 3\n", encoding="utf-8")
    payload = _json(runner.invoke(cli, ["--config", str(config), "triangles", "exact"]))
    # 4 labelings times E[psi(1-psi)] for psi ~ Beta(1, 1)
    assert payload["results"]["expectation"] == pytest.approx(2 / 3)
    assert payload["config"]["delta"] == -1.0


def test_malformed_config_file(runner, tmp_path):
    config = tmp_path / "bad.cfg"
    config.write_text("m 2\n", encoding="utf-8")
    result = runner.invoke(cli, ["--config", str(config), "triangles", "exact"])
    assert result.exit_code == 15


def test_count_generated_graph(runner, tmp_path):
    graph_path = tmp_path / "graph.txt"
    result = runner.invoke(
        cli,
        ["generate", "--m", "3", "--delta", "0", "--t", "200", "--seed", "3", "--out", str(graph_path)],
    )
    assert result.exit_code == 0, result.output
    result = runner.invoke(cli, ["count", "--graph", str(graph_path), "--subgraph", "triangle", "--ordered"])
    assert result.exit_code == 0, result.output
    rows = list(csv.DictReader(io.StringIO(result.output)))
    assert list(rows[0]) == ["subgraph", "t", "count", "mode"]
    assert int(rows[0]["count"]) == count_triangles(read_edge_list(graph_path))
    assert rows[0]["mode"] == "triangle-fast"


def test_count_unordered_sums_orderings(runner, tmp_path):
    graph_path = tmp_path / "graph.txt"
    runner.invoke(
        cli,
        ["generate", "--m", "2", "--delta", "0", "--t", "80", "--seed", "4", "--out", str(graph_path)],
    )
    result = runner.invoke(cli, ["count", "--graph", str(graph_path), "--subgraph", "2>1,3>2"])
    assert result.exit_code == 0, result.output
    rows = list(csv.DictReader(io.StringIO(result.output)))
    assert rows[-1]["mode"] == "sum"
    assert int(rows[-1]["count"]) == sum(int(row["count"]) for row in rows[:-1])


def test_atlas_csv(runner):
    result = runner.invoke(cli, ["atlas", "--m", "2", "--delta=-1"])
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0].startswith("graph_id,k,edges,attainable")
    assert len(lines) == 29


def test_embed_prob(runner, tmp_path):
    edges = tmp_path / "edges.txt"
    edges.write_text("1 3 1\n", encoding="utf-8")
    payload = _json(
        runner.invoke(cli, ["embed-prob", "--edges", str(edges), "--m", "2", "--delta", "0", "--t", "5"])
    )
    assert payload["results"]["probability"] == pytest.approx(0.5)


def test_classify_hub_wedge(runner):
    payload = _json(
        runner.invoke(
            cli, ["concentration", "classify", "--subgraph", "hub-wedge", "--ordered", "--m", "2", "--delta=-1"]
        )
    )
    assert payload["results"]["status"] == "non-concentration-candidate"


def test_scaling_experiment_output_does_not_depend_on_workers(runner):
    args = [
        "experiment", "scaling", "--subgraph", "triangle", "--m", "2", "--delta", "0",
        "--t", "20,40", "--replicas", "3", "--seed", "11",
    ]
    serial = runner.invoke(cli, [*args, "--workers", "1"])
    parallel = runner.invoke(cli, [*args, "--workers", "2"])
    assert serial.exit_code == 0, serial.output
    assert serial.output == parallel.output
    assert serial.output.splitlines()[0] == "t,mean,stderr,predicted,corrected_slope"


def test_concentration_summary_table(runner):
    result = runner.invoke(
        cli,
        [
            "concentration", "experiment", "--subgraph", "triangle", "--m", "2", "--delta", "0",
            "--t", "20,40", "--replicas", "3", "--seed", "5", "--table", "summary",
        ],
    )
    assert result.exit_code == 0, result.output
    assert result.output.splitlines()[0] == "t,mean,variance,relative_variance"


def test_t_list_must_increase(runner):
    result = runner.invoke(
        cli,
        ["experiment", "scaling", "--subgraph", "triangle", "--m", "2", "--delta", "0",
         "--t", "40,20", "--seed", "1"],
    )
    assert result.exit_code == 15
