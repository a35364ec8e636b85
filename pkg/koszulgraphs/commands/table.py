import click
from flask import current_app

from koszulgraphs.harness import run_table

from . import (
    degree_bound_option,
    emit,
    format_option,
    koszul_bp,
    progress_option,
    reports_errors,
    resolve_degree_bound,
    resolve_workers,
    workers_option,
)


@koszul_bp.cli.command("table")
@click.option("--n", "n", type=int, required=True, help="Vertex count (at most 6).")
@degree_bound_option
@workers_option
@progress_option
@format_option
@reports_errors
def table_command(n, degree_bound, workers, progress, fmt):
    """Classify every connected graph on n vertices."""
    report = run_table(n, resolve_degree_bound(degree_bound), resolve_workers(workers), progress)
    current_app.logger.info("Table %s with %d records", report.code, report.total)
    emit(fmt, report.to_dict(), report.to_text())
