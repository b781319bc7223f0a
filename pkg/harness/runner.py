"""Dispatch of a validated ExperimentConfig to the library, with error records."""

import json
import re
from collections.abc import Callable
from typing import Any

import click
from pydantic import ValidationError

from census import census, scaling_experiment
from concentration import classify, variance_experiment
from generation import (
    degree_sequence,
    dump_urn_csv,
    format_edge_list,
    generate_sequential,
    generate_urn,
    max_strength_after,
    position_deviation,
    read_edge_list,
    strength_excess_fraction,
    tail_exponent,
)
from optimizer import atlas, catalog_entry, solve_B, solve_B_unordered
from subgraphs import (
    OrderedSubgraph,
    UnorderedDigraph,
    as_ordered,
    distinct_orderings,
    load_subgraph,
)
from theory import (
    asymptotic_triangle_expectation,
    exact_embedding_probability,
    exact_triangle_expectation,
    log_embedding_probability,
    read_edge_set,
)
from utils.errors import NotAttainableError, PamError, ParameterError, SubgraphFormatError
from utils.logger import Logger
from utils.types import Command, OutputFormat

from .config import ExperimentConfig, build_config
from .emit import emit, write_text

_CATALOG_ID = re.compile(r"^k\d+-\d+$")


def resolve_subgraph(source: str, ordered: bool) -> UnorderedDigraph:
    """Library name, catalog id, inline edges, or JSON file."""
    if _CATALOG_ID.match(source.strip()):
        try:
            graph = catalog_entry(source.strip()).graph
        except KeyError as exc:
            raise SubgraphFormatError(str(exc.args[0])) from exc
        return as_ordered(graph) if ordered else graph
    return load_subgraph(source, ordered)


def _emit(config: ExperimentConfig, results: Any, columns: list[str] | None = None) -> None:
    emit(results, config.resolved_format(), config.to_record(), config.out, columns)


def _generate(config: ExperimentConfig) -> None:
    params = config.params()
    if config.generator == "sequential":
        graph = generate_sequential(params, config.t, config.root_seed(), config.sampler)
    else:
        graph, urn = generate_urn(params, config.t, config.root_seed())
        if config.dump_csv:
            dump_urn_csv(urn, config.dump_csv)
    write_text(format_edge_list(graph), config.out)


def _count(config: ExperimentConfig) -> None:
    graph = read_edge_list(config.graph)
    shape = resolve_subgraph(config.subgraph, config.ordered)
    if isinstance(shape, OrderedSubgraph):
        _emit(config, census(graph, shape, config.mode).to_dict())
        return
    orderings = distinct_orderings(shape, graph.m)
    if not orderings:
        raise NotAttainableError(f"no ordering of {shape.to_inline()} is attainable with m={graph.m}")
    rows = [census(graph, h, config.mode).to_dict() for h in orderings]
    rows.append(
        {
            "subgraph": shape.to_inline(),
            "t": graph.t,
            "count": sum(row["count"] for row in rows),
            "mode": "sum",
        }
    )
    _emit(config, rows)


def _predict(config: ExperimentConfig) -> None:
    params = config.params()
    shape = resolve_subgraph(config.subgraph, config.ordered)
    if isinstance(shape, OrderedSubgraph):
        _emit(config, solve_B(shape, params).to_dict())
        return
    best, reports = solve_B_unordered(shape, params)
    payload = best.to_dict()
    payload["orderings"] = len(reports)
    _emit(config, payload)


def _atlas(config: ExperimentConfig) -> None:
    rows = atlas(config.params(), sizes=config.sizes, workers=config.workers)
    _emit(config, [row.to_dict() for row in rows])


def _triangles_exact(config: ExperimentConfig) -> None:
    value = exact_triangle_expectation(config.params(), config.t)
    _emit(config, {"m": config.m, "delta": config.delta, "t": config.t, "expectation": value})


def _triangles_asymptotic(config: ExperimentConfig) -> None:
    value = asymptotic_triangle_expectation(config.params(), config.t)
    _emit(config, {"m": config.m, "delta": config.delta, "t": config.t, "expectation": value})


def _embed_prob(config: ExperimentConfig) -> None:
    params = config.params()
    es = read_edge_set(config.edges)
    _emit(
        config,
        {
            "edges": len(es.edges),
            "t": config.t,
            "probability": exact_embedding_probability(es, params, config.t),
            "log_probability": log_embedding_probability(es, params, config.t),
        },
    )


def _scaling(config: ExperimentConfig) -> None:
    shape = resolve_subgraph(config.subgraph, config.ordered)
    table = scaling_experiment(
        config.params(),
        shape,
        list(config.t_list),
        config.replicas,
        config.root_seed(),
        generator=config.generator,
        workers=config.workers,
    )
    if config.resolved_format() is OutputFormat.JSON:
        _emit(
            config,
            {
                "subgraph": table.subgraph,
                "exponent": table.exponent,
                "exponent_symbolic": table.exponent_symbolic,
                "log_power": table.log_power,
                "corrected_slope": table.corrected_slope,
                "rows": table.records(),
            },
        )
        return
    _emit(config, table.records(), ["t", "mean", "stderr", "predicted", "corrected_slope"])


def _classified_shape(config: ExperimentConfig) -> OrderedSubgraph:
    params = config.params()
    shape = resolve_subgraph(config.subgraph, config.ordered)
    if isinstance(shape, OrderedSubgraph):
        return shape
    best, _ = solve_B_unordered(shape, params)
    return best.subgraph


def _classify(config: ExperimentConfig) -> None:
    verdict = classify(_classified_shape(config), config.params())
    if config.resolved_format() is OutputFormat.JSON:
        _emit(config, verdict.to_dict())
        return
    rows = [shape.to_dict() for shape in verdict.merged_table]
    _emit(
        config,
        rows,
        ["shape_id", "k", "edges", "attainable", "exponent", "exponent_symbolic", "log_power", "violates"],
    )


def _concentration_experiment(config: ExperimentConfig) -> None:
    shape = resolve_subgraph(config.subgraph, config.ordered)
    table = variance_experiment(
        config.params(),
        shape,
        list(config.t_list),
        config.replicas,
        config.root_seed(),
        generator=config.generator,
        workers=config.workers,
    )
    if config.table == "summary":
        _emit(config, table.records(), ["t", "mean", "variance", "relative_variance"])
    elif config.table == "histogram":
        _emit(config, table.histogram_records(), ["t", "bin_lo", "bin_hi", "density"])
    else:
        _emit(config, table.density_records(), ["t", "replica", "count", "normalized"])


def _diagnose(config: ExperimentConfig) -> None:
    params = config.params()
    graph, urn = generate_urn(params, config.t, config.root_seed())
    if config.dump_csv:
        dump_urn_csv(urn, config.dump_csv)
    degrees = degree_sequence(graph)
    _emit(
        config,
        {
            "t": config.t,
            "tau": params.tau(),
            "tau_estimate": tail_exponent(degrees, config.d_min),
            "position_deviation": position_deviation(urn),
            "strength_excess_fraction": strength_excess_fraction(urn, config.k_min),
            "max_strength_after": max_strength_after(urn, config.k_min),
        },
    )


_HANDLERS: dict[Command, Callable[[ExperimentConfig], None]] = {
    Command.GENERATE: _generate,
    Command.COUNT: _count,
    Command.PREDICT: _predict,
    Command.ATLAS: _atlas,
    Command.TRIANGLES_EXACT: _triangles_exact,
    Command.TRIANGLES_ASYMPTOTIC: _triangles_asymptotic,
    Command.EMBED_PROB: _embed_prob,
    Command.EXPERIMENT_SCALING: _scaling,
    Command.CONCENTRATION_CLASSIFY: _classify,
    Command.CONCENTRATION_EXPERIMENT: _concentration_experiment,
    Command.DIAGNOSE: _diagnose,
}


def _report_failure(record: dict[str, Any]) -> int:
    click.echo(json.dumps(record, sort_keys=True), err=True)
    return int(record["code"])


def run(config: ExperimentConfig) -> int:
    """Execute one command; 0 on success, the error code otherwise."""
    Logger.stage("run", "started", command=config.command.value)
    try:
        _HANDLERS[config.command](config)
    except PamError as exc:
        Logger.error("run | failed | command=%s error=%s", config.command.value, exc.message)
        return _report_failure(exc.to_record())
    except ValidationError as exc:
        error = ParameterError(f"invalid parameters: {exc.errors()[0]['msg']}")
        Logger.error("run | failed | command=%s error=%s", config.command.value, error.message)
        return _report_failure(error.to_record())
    except Exception as exc:  # noqa: BLE001  # pylint: disable=broad-exception-caught
        Logger.error("run | crashed | command=%s error=%s", config.command.value, exc)
        return _report_failure({"error": type(exc).__name__, "code": 1, "message": str(exc)})
    Logger.stage("run", "completed", command=config.command.value)
    return 0


def run_command(command: Command, **options: Any) -> int:
    """Build the config from CLI options and run it."""
    try:
        config = build_config(command, **options)
    except PamError as exc:
        return _report_failure(exc.to_record())
    return run(config)
