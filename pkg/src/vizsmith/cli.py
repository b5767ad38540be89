"""Command-line front end: each subcommand is a thin adapter over one
engine module, reading files or stdin and writing results to stdout."""

from __future__ import annotations

import pathlib
import sys

import click

from .augment import augment as augment_source
from .corpus import compute_stats, ingest, load_packaged_corpus
from .datasets import load_dataset, select_attributes
from .errors import VizsmithError
from .fitting import fit_template
from .mdp import cross_validate, recommend, seed, state_from_names
from .svgfeatures import classify as classify_features
from .svgfeatures import extract_features
from .templates import get_viz_template, interaction_from_name, viz_from_name


def _fail(error: VizsmithError) -> None:
    click.echo(f"{error.code}: {error.message}", err=True)
    sys.exit(1)


def _load_corpus(path: str | None):
    if path is None:
        return load_packaged_corpus()
    return ingest(pathlib.Path(path).read_text("utf-8"))


@click.group()
def main() -> None:
    """Chart-code workbench: fit templates, augment programs, recommend
    interactions, classify rendered output."""


@main.command()
@click.option("--template", "viz_name", required=True, help="visualization type")
@click.option("--data", "data_path", required=True, type=click.Path(exists=True))
@click.option("--format", "data_format", default=None, help="csv or json (default: by suffix)")
@click.option("--data-url", default=None, help="URL the emitted code loads data from")
@click.option(
    "--bind",
    "bindings",
    multiple=True,
    help="explicit slot=attribute binding (repeatable)",
)
def fit(viz_name, data_path, data_format, data_url, bindings) -> None:
    """Fit a visualization template to a dataset and print the source."""
    try:
        viz = viz_from_name(viz_name)
        path = pathlib.Path(data_path)
        fmt = data_format or ("json" if path.suffix == ".json" else "csv")
        dataset = load_dataset(path.read_bytes(), fmt, name=path.stem)
        binding = select_attributes(dataset, viz)
        for override in bindings:
            slot, _, attr = override.partition("=")
            binding.slots[slot] = attr
            binding.scales.pop(slot, None)
        program = fit_template(get_viz_template(viz), dataset, binding, data_url=data_url)
    except VizsmithError as error:
        _fail(error)
    click.echo(program.source, nl=False)


@main.command(name="augment")
@click.option("--source", "source_path", required=True, type=click.Path(exists=True))
@click.option("--interaction", required=True)
@click.option("--viz", "viz_name", required=True)
@click.option("--state", default="", help="comma-separated interactions already present")
def augment_cmd(source_path, interaction, viz_name, state) -> None:
    """Splice an interaction into a program and print the new source."""
    try:
        result = augment_source(
            pathlib.Path(source_path).read_text("utf-8"),
            interaction_from_name(interaction),
            viz_from_name(viz_name),
            state_from_names(state),
        )
    except VizsmithError as error:
        _fail(error)
    click.echo(result.source, nl=False)
    click.echo(f"inserted: {result.inserted_ranges} {result.summary}", err=True)


@main.command(name="recommend")
@click.option("--viz", "viz_name", required=True)
@click.option("--state", default="", help="comma-separated interactions already present")
@click.option("--corpus", "corpus_path", default=None, type=click.Path(exists=True))
def recommend_cmd(viz_name, state, corpus_path) -> None:
    """Print ranked interaction recommendations for a chart type."""
    try:
        model = seed(_load_corpus(corpus_path))
        recs = recommend(model, state_from_names(state), viz_from_name(viz_name))
    except VizsmithError as error:
        _fail(error)
    for rec in recs:
        click.echo(f"{rec.rank} {rec.interaction.value} {rec.score:.4f}")


@main.command(name="classify")
@click.option("--svg", "svg_path", required=True, type=click.Path(exists=True))
def classify_cmd(svg_path) -> None:
    """Predict the visualization type of a rendered SVG document."""
    try:
        result = classify_features(
            extract_features(pathlib.Path(svg_path).read_text("utf-8"))
        )
    except VizsmithError as error:
        _fail(error)
    name = result.viz.value if result.viz else "unknown"
    click.echo(f"{name} {result.confidence:.3f}")


@main.command(name="stats")
@click.option("--corpus", "corpus_path", default=None, type=click.Path(exists=True))
def stats_cmd(corpus_path) -> None:
    """Print corpus aggregates: marginals, pairings, interactivity."""
    try:
        stats = compute_stats(_load_corpus(corpus_path))
    except VizsmithError as error:
        _fail(error)
    click.echo(f"examples {stats.total_examples} viable {stats.viable_count}")
    click.echo(
        f"interactive {stats.interactive_count} ({stats.interactive_fraction}%)"
    )
    click.echo(f"visualization instances {stats.total_viz_instances}")
    for viz, count in sorted(
        stats.viz_instance_counts.items(), key=lambda kv: (-kv[1], kv[0])
    ):
        click.echo(f"  {viz} {count} ({stats.viz_percentage(viz)}%)")
    click.echo("interaction instances " + str(sum(stats.interaction_counts.values())))
    for token, count in sorted(
        stats.interaction_counts.items(), key=lambda kv: (-kv[1], kv[0])
    ):
        click.echo(f"  {token} {count}")
    click.echo(
        f"distinct pairs {stats.distinct_pair_count} "
        f"(click+hover {stats.pair_share('click', 'hover')}% of occurrences)"
    )


@main.command(name="xval")
@click.option("--corpus", "corpus_path", default=None, type=click.Path(exists=True))
@click.option("--k", default=3, show_default=True, help="rank cutoff")
def xval_cmd(corpus_path, k) -> None:
    """Leave-one-out accuracy of empty-state recommendations."""
    try:
        report = cross_validate(_load_corpus(corpus_path), k=k)
    except VizsmithError as error:
        _fail(error)
    for token, accuracy in report["per_interaction"].items():
        click.echo(f"{token} {accuracy:.2f}")
    click.echo(f"overall {report['overall']:.2f} (k={report['k']}, n={report['evaluated']})")


@main.command(name="serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=None, type=int, help="default: $VIZSMITH_PORT or 8080")
@click.option("--model-path", default=None, type=click.Path())
@click.option("--corpus", "corpus_path", default=None, type=click.Path(exists=True))
def serve_cmd(host, port, model_path, corpus_path) -> None:
    """Run the HTTP service."""
    import os

    import uvicorn

    from .service import create_app

    resolved_port = port or int(os.environ.get("VIZSMITH_PORT", "8080"))
    app = create_app(corpus_path=corpus_path, model_path=model_path)
    uvicorn.run(app, host=host, port=resolved_port, log_level="info")


if __name__ == "__main__":
    main()
