import click
from flask import current_app

from koszulgraphs.graph6 import graph6_encode, write_graph6_file
from koszulgraphs.graphs import enumerate_graphs

from . import emit, format_option, koszul_bp, reports_errors


@koszul_bp.cli.command("enum")
@click.option("--n", "n", type=int, required=True, help="Vertex count.")
@click.option("--connected", is_flag=True, help="Connected graphs only.")
@click.option("--out", "out_path", type=click.Path(dir_okay=False), help="Also write graph6 lines here.")
@format_option
@reports_errors
def enum_command(n, connected, out_path, fmt):
    """List one graph per isomorphism class in graph6."""
    graphs = enumerate_graphs(n, connected_only=connected)
    codes = [graph6_encode(g) for g in graphs]
    current_app.logger.info("Enumerated %d graphs on %d vertices", len(codes), n)

    if out_path:
        write_graph6_file(out_path, graphs)

    emit(
        fmt,
        {"n": n, "connected": connected, "count": len(codes), "graphs": codes},
        "\n".join(codes),
    )
