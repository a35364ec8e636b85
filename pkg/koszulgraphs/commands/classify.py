import click

from koszulgraphs.graph6 import graph6_decode, read_graph6_file
from koszulgraphs.harness import classify, record_lines

from . import (
    UsageFailure,
    degree_bound_option,
    emit,
    format_option,
    koszul_bp,
    reports_errors,
    resolve_degree_bound,
)


def load_graphs(in_path, graph6):
    """Graphs from exactly one of --in FILE and --graph6 S."""
    if bool(in_path) == bool(graph6):
        raise UsageFailure("Give exactly one of --in FILE and --graph6 S.")
    if graph6:
        return [graph6_decode(graph6)]
    return read_graph6_file(in_path)


@koszul_bp.cli.command("classify")
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), help="graph6 file, one graph per line.")
@click.option("--graph6", "graph6", help="A single graph6 string.")
@degree_bound_option
@format_option
@reports_errors
def classify_command(in_path, graph6, degree_bound, fmt):
    """Evaluate every class recognizer and the oracle on the given graphs."""
    max_degree = resolve_degree_bound(degree_bound)
    records = [classify(g, max_degree) for g in load_graphs(in_path, graph6)]

    emit(
        fmt,
        {"degree_bound": max_degree, "records": [r.to_dict() for r in records]},
        "\n".join(record_lines(records)),
    )
