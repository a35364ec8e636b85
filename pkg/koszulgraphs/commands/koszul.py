import json

import click

from koszulgraphs.graph6 import graph6_decode
from koszulgraphs.oracle import is_strongly_koszul, verdict_to_json
from koszulgraphs.posets import poset_from_json
from koszulgraphs.toric import generator_table, hibi_ring, stable_ring

from . import (
    UsageFailure,
    degree_bound_option,
    emit,
    format_option,
    koszul_bp,
    reports_errors,
    resolve_degree_bound,
)


@koszul_bp.cli.command("koszul")
@click.option("--graph6", "graph6", help="Test k[Q_G] for this graph.")
@click.option("--poset", "poset_path", type=click.Path(exists=True, dir_okay=False), help="Test the Hibi ring of this poset JSON.")
@degree_bound_option
@format_option
@reports_errors
def koszul_command(graph6, poset_path, degree_bound, fmt):
    """Run the strong Koszulness oracle on one semigroup ring."""
    if bool(graph6) == bool(poset_path):
        raise UsageFailure("Give exactly one of --graph6 S and --poset FILE.")
    max_degree = resolve_degree_bound(degree_bound)

    if graph6:
        ring = stable_ring(graph6_decode(graph6))
        source = {"graph6": graph6.strip()}
    else:
        with open(poset_path, "r", encoding="utf-8") as f:
            poset = poset_from_json(json.load(f))
        ring = hibi_ring(poset)
        source = {"poset": poset_path}

    verdict = is_strongly_koszul(ring, max_degree)

    if verdict.strongly_koszul:
        text = f"strongly Koszul up to degree {max_degree} ({ring.size} generators)"
    else:
        w = verdict.witness
        subsets = [list(ring.labels[k]) for k in w.pair]
        text = (
            f"not strongly Koszul: generators {w.pair[0]} {subsets[0]} and {w.pair[1]} {subsets[1]}, "
            f"degree {w.degree} element {list(w.vector)}"
        )

    emit(
        fmt,
        {**source, "generators": generator_table(ring), "verdict": verdict_to_json(verdict)},
        text,
    )
