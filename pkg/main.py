"""Command-line entry point (`pam`)."""

import json
import sys
from typing import Any

import click

from harness import default_map_for, read_config_file, run_command
from utils.errors import PamError
from utils.types import CensusMode, Command, OutputFormat


def _parse_t_list(ctx: click.Context, param: click.Parameter, value: Any) -> tuple[int, ...]:
    if value is None or isinstance(value, tuple):
        return value or ()
    try:
        return tuple(int(part) for part in str(value).split(",") if part.strip())
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got '{value}'") from None


def _load_config(ctx: click.Context, param: click.Parameter, value: str | None) -> None:
    if not value:
        return
    try:
        values = read_config_file(value)
    except PamError as exc:
        click.echo(json.dumps(exc.to_record(), sort_keys=True), err=True)
        ctx.exit(exc.code)
    ctx.default_map = default_map_for(ctx.command, values)


def _finish(command: Command, **options: Any) -> None:
    sys.exit(run_command(command, **options))


def params_options(func):
    func = click.option("--delta", type=float, help="Attachment offset δ > -m.")(func)
    func = click.option("--m", type=int, help="Edges per new vertex.")(func)
    return func


def output_options(func):
    func = click.option(
        "--format",
        "output_format",
        type=click.Choice([fmt.value for fmt in OutputFormat]),
        default=None,
        help="csv or json; each command has its own default.",
    )(func)
    func = click.option("--out", type=click.Path(dir_okay=False), default=None, help="Output file (stdout if omitted).")(func)
    return func


def subgraph_options(func):
    func = click.option("--ordered", is_flag=True, default=False, help="Treat vertex ids as positions.")(func)
    func = click.option(
        "--subgraph", help="Shape name, catalog id, inline edges '2>1,3>1' or JSON file."
    )(func)
    return func


def experiment_options(func):
    func = click.option("--workers", type=int, default=None, help="Worker processes (default PAM_WORKERS).")(func)
    func = click.option(
        "--generator", type=click.Choice(["urn", "sequential"]), default="urn", show_default=True
    )(func)
    func = click.option("--seed", type=int, default=None, help="Root seed.")(func)
    func = click.option("--replicas", type=int, default=1, show_default=True)(func)
    func = click.option(
        "--t", "t_list", callback=_parse_t_list, help="Comma-separated graph sizes, increasing."
    )(func)
    return func


def _format(value: str | None) -> OutputFormat | None:
    return OutputFormat(value) if value else None


@click.group()
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False),
    callback=_load_config,
    is_eager=True,
    expose_value=False,
    help="Flat key=value file supplying option defaults.",
)
def cli() -> None:
    """Subgraph counts in preferential attachment graphs."""


@cli.command()
@params_options
@click.option("--t", type=int, help="Number of vertices.")
@click.option("--seed", type=int, default=None)
@click.option("--sequential", "generator", flag_value="sequential", help="Edge-by-edge growth.")
@click.option("--urn", "generator", flag_value="urn", default=True, help="Pólya urn construction.")
@click.option("--sampler", type=click.Choice(["fenwick", "linear"]), default="fenwick", show_default=True)
@click.option("--dump-csv", type=click.Path(dir_okay=False), default=None, help="Write k,psi,S of the urn.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
def generate(m, delta, t, seed, generator, sampler, dump_csv, out) -> None:
    """Generate a graph and write it as an edge list."""
    _finish(
        Command.GENERATE, m=m, delta=delta, t=t, seed=seed, generator=generator,
        sampler=sampler, dump_csv=dump_csv, out=out,
    )


@cli.command()
@click.option("--graph", type=click.Path(dir_okay=False), help="Edge-list file.")
@subgraph_options
@click.option("--mode", type=click.Choice([mode.value for mode in CensusMode]), default=None)
@output_options
def count(graph, subgraph, ordered, mode, out, output_format) -> None:
    """Count copies of a subgraph in a stored graph."""
    _finish(
        Command.COUNT, graph=graph, subgraph=subgraph, ordered=ordered,
        mode=CensusMode(mode) if mode else None, out=out, output_format=_format(output_format),
    )


@cli.command()
@subgraph_options
@params_options
@output_options
def predict(subgraph, ordered, m, delta, out, output_format) -> None:
    """Growth exponent and log power of the expected count."""
    _finish(
        Command.PREDICT, subgraph=subgraph, ordered=ordered, m=m, delta=delta,
        out=out, output_format=_format(output_format),
    )


@cli.command("atlas")
@params_options
@click.option("--sizes", default="3,4", show_default=True, help="Vertex counts to cover.")
@click.option("--workers", type=int, default=None)
@output_options
def atlas_command(m, delta, sizes, workers, out, output_format) -> None:
    """Exponent table over every connected DAG shape."""
    try:
        parsed = tuple(int(part) for part in sizes.split(","))
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got '{sizes}'") from None
    _finish(
        Command.ATLAS, m=m, delta=delta, sizes=parsed, workers=workers,
        out=out, output_format=_format(output_format),
    )


@cli.group()
def triangles() -> None:
    """Expected triangle counts."""


@triangles.command("exact")
@params_options
@click.option("--t", type=int)
@output_options
def triangles_exact(m, delta, t, out, output_format) -> None:
    _finish(
        Command.TRIANGLES_EXACT, m=m, delta=delta, t=t, out=out, output_format=_format(output_format)
    )


@triangles.command("asymptotic")
@params_options
@click.option("--t", type=int)
@output_options
def triangles_asymptotic(m, delta, t, out, output_format) -> None:
    _finish(
        Command.TRIANGLES_ASYMPTOTIC, m=m, delta=delta, t=t, out=out,
        output_format=_format(output_format),
    )


@cli.command("embed-prob")
@click.option("--edges", type=click.Path(dir_okay=False), help="Labeled edges u v j, or JSON.")
@params_options
@click.option("--t", type=int)
@output_options
def embed_prob(edges, m, delta, t, out, output_format) -> None:
    """Exact probability that a labeled edge set is present."""
    _finish(
        Command.EMBED_PROB, edges=edges, m=m, delta=delta, t=t, out=out,
        output_format=_format(output_format),
    )


@cli.group()
def experiment() -> None:
    """Monte Carlo experiments."""


@experiment.command("scaling")
@subgraph_options
@params_options
@experiment_options
@output_options
def experiment_scaling(
    subgraph, ordered, m, delta, t_list, replicas, seed, generator, workers, out, output_format
) -> None:
    """Mean count against graph size, with the predicted growth."""
    _finish(
        Command.EXPERIMENT_SCALING, subgraph=subgraph, ordered=ordered, m=m, delta=delta,
        t_list=t_list, replicas=replicas, seed=seed, generator=generator, workers=workers,
        out=out, output_format=_format(output_format),
    )


@cli.group()
def concentration() -> None:
    """Concentration criterion and count spread."""


@concentration.command("classify")
@subgraph_options
@params_options
@output_options
def concentration_classify(subgraph, ordered, m, delta, out, output_format) -> None:
    _finish(
        Command.CONCENTRATION_CLASSIFY, subgraph=subgraph, ordered=ordered, m=m, delta=delta,
        out=out, output_format=_format(output_format),
    )


@concentration.command("experiment")
@subgraph_options
@params_options
@experiment_options
@click.option(
    "--table", type=click.Choice(["density", "summary", "histogram"]), default="density",
    show_default=True,
)
@output_options
def concentration_experiment(
    subgraph, ordered, m, delta, t_list, replicas, seed, generator, workers, table, out,
    output_format,
) -> None:
    """Replica counts normalised by their mean."""
    _finish(
        Command.CONCENTRATION_EXPERIMENT, subgraph=subgraph, ordered=ordered, m=m, delta=delta,
        t_list=t_list, replicas=replicas, seed=seed, generator=generator, workers=workers,
        table=table, out=out, output_format=_format(output_format),
    )


@cli.command()
@params_options
@click.option("--t", type=int)
@click.option("--seed", type=int, default=None)
@click.option("--k-min", type=int, default=2, show_default=True)
@click.option("--d-min", type=int, default=10, show_default=True, help="Smallest degree in the tail fit.")
@click.option("--dump-csv", type=click.Path(dir_okay=False), default=None)
@output_options
def diagnose(m, delta, t, seed, k_min, d_min, dump_csv, out, output_format) -> None:
    """Latent strength diagnostics of one urn draw."""
    _finish(
        Command.DIAGNOSE, m=m, delta=delta, t=t, seed=seed, k_min=k_min, d_min=d_min,
        dump_csv=dump_csv, out=out, output_format=_format(output_format),
    )


if __name__ == "__main__":
    cli()
