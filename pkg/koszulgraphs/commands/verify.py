import click
from flask import current_app

from koszulgraphs.harness import FAULTS, verify_theorems

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


@koszul_bp.cli.command("verify")
@click.option("--n", "n", type=int, required=True, help="Largest vertex count (at most 6).")
@degree_bound_option
@click.option("--compare-bound", type=int, default=None, help="Rerun the oracle at this bound and compare.")
@click.option("--fault", type=click.Choice(FAULTS), default=None, help="Negate one recognizer (sanity check).")
@workers_option
@progress_option
@format_option
@reports_errors
def verify_command(n, degree_bound, compare_bound, fault, workers, progress, fmt):
    """Run every cross-check; exit status 1 when any check fails."""
    max_degree = resolve_degree_bound(degree_bound)
    if compare_bound is not None:
        compare_bound = resolve_degree_bound(compare_bound, "Compare bound")

    report = verify_theorems(
        n,
        max_degree,
        workers=resolve_workers(workers),
        progress=progress,
        fault=fault,
        compare_bound=compare_bound,
    )
    emit(fmt, report.to_dict(), report.to_text())

    if not report.passed:
        current_app.logger.error("%d verification check(s) failed", len(report.failures))
        click.get_current_context().exit(1)
