import json
import logging
from dataclasses import dataclass, field
from functools import partial
from multiprocessing import Pool
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from tqdm import tqdm

from koszulgraphs.canon_utils import build_report_code_and_name
from koszulgraphs.errors import KoszulGraphsError, check_bound
from koszulgraphs.graph6 import graph6_encode
from koszulgraphs.graph_classes import (
    is_almost_bipartite,
    is_bipartite,
    is_c4_p4_free,
    is_comparability,
    is_hl_comparability,
    is_perfect_desk,
    is_threshold_constructive,
    is_threshold_forbidden,
    is_trivially_perfect_by_definition,
    tree_orientation,
)
from koszulgraphs.graphs import (
    complement,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    enumerate_graphs,
    is_connected,
    path_graph,
)
from koszulgraphs.invariants import invariant_bundle, is_chordal
from koszulgraphs.limits import (
    DEFAULT_DEGREE_BOUND,
    HEREDITY_BOUND,
    ORIENTATION_BOUND,
    POSET_ENUMERATION_BOUND,
    TABLE_BOUND,
)
from koszulgraphs.models import CLASS_FLAGS, ClassificationRecord, Graph, PatternKind, Poset
from koszulgraphs.oracle import (
    graph_is_strongly_koszul,
    heredity_check,
    is_strongly_koszul,
    verify_witness,
)
from koszulgraphs.posets import (
    comparability_graph,
    contains_pattern,
    enumerate_posets,
    is_tree_poset_by_definition,
    is_tree_poset_by_forbidden,
    is_tree_poset_by_wedge,
    poset_to_json,
)
from koszulgraphs.toric import hibi_ring, stable_ring, transfer_consistency

logger = logging.getLogger(__name__)

# Largest posets used by the poset checks
HIBI_POSET_BOUND = 5
TRANSFER_POSET_BOUND = 4
# HL = comparability and almost bipartite = K4-free only hold this far
SMALL_GRAPH_BOUND = 5


# -------------------------
# Worker pool
# -------------------------


def parallel_map(
    fn: Callable,
    items: Sequence,
    workers: int = 1,
    progress: bool = False,
    desc: Optional[str] = None,
) -> List:
    """Order-preserving map, over a process pool when workers > 1."""
    if workers > 1 and len(items) > 1:
        chunksize = max(1, len(items) // (workers * 4))
        with Pool(workers) as pool:
            results = pool.imap(fn, items, chunksize=chunksize)
            return list(tqdm(results, total=len(items), desc=desc, disable=not progress))
    return [fn(item) for item in tqdm(items, desc=desc, disable=not progress)]


# -------------------------
# Classification
# -------------------------


def classify(g: Graph, max_degree: int = DEFAULT_DEGREE_BOUND) -> ClassificationRecord:
    """Every class flag and invariant of g; the oracle runs only for n <= 6."""
    check_bound(g.n, ORIENTATION_BOUND, "Vertex count")
    strongly_koszul = graph_is_strongly_koszul(g, max_degree) if g.n <= TABLE_BOUND else None

    return ClassificationRecord(
        graph6=graph6_encode(g),
        n=g.n,
        edge_count=g.edge_count,
        invariants=invariant_bundle(g),
        bipartite=is_bipartite(g),
        almost_bipartite=is_almost_bipartite(g),
        chordal=is_chordal(g),
        perfect=is_perfect_desk(g),
        comparability=is_comparability(g),
        hl_comparability=is_hl_comparability(g),
        threshold=is_threshold_constructive(g),
        trivially_perfect=is_trivially_perfect_by_definition(g),
        strongly_koszul=strongly_koszul,
        degree_bound=max_degree,
    )


_FLAG_LABELS = {
    "bipartite": "bip",
    "almost_bipartite": "abip",
    "chordal": "chord",
    "perfect": "perf",
    "comparability": "comp",
    "hl_comparability": "hl",
    "threshold": "thr",
    "trivially_perfect": "tp",
    "strongly_koszul": "sk",
}


def _mark(value: Optional[bool]) -> str:
    if value is None:
        return "?"
    return "x" if value else "."


def record_lines(records: Iterable[ClassificationRecord]) -> List[str]:
    """Fixed-width rows: graph6, edges, the five invariants, then one mark per flag."""
    header = f"{'graph6':<10} {'e':>2}  {'a':>2} {'m':>2} {'w':>2} {'t':>2} {'c':>2}  "
    header += " ".join(f"{_FLAG_LABELS[f]:>5}" for f in CLASS_FLAGS)
    lines = [header]
    for r in records:
        inv = r.invariants
        row = f"{r.graph6:<10} {r.edge_count:>2}  "
        row += f"{inv.alpha:>2} {inv.m:>2} {inv.omega:>2} {inv.theta:>2} {inv.chi:>2}  "
        row += " ".join(f"{_mark(v):>5}" for v in r.flags().values())
        lines.append(row)
    return lines


@dataclass(frozen=True)
class TableReport:
    n: int
    degree_bound: int
    records: List[ClassificationRecord]
    counts: Dict[str, int]
    code: str
    name: str

    @property
    def total(self) -> int:
        return len(self.records)

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "name": self.name,
            "n": self.n,
            "degree_bound": self.degree_bound,
            "total": self.total,
            "counts": dict(self.counts),
            "records": [r.to_dict() for r in self.records],
        }

    def to_text(self) -> str:
        lines = [f"{self.code}  {self.name}", ""]
        lines += record_lines(self.records)
        lines.append("")
        lines.append(f"{'total':<17} {self.total:>4}")
        for flag in CLASS_FLAGS:
            lines.append(f"{flag:<17} {self.counts[flag]:>4}")
        return "\n".join(lines)


def run_table(
    n: int,
    max_degree: int = DEFAULT_DEGREE_BOUND,
    workers: int = 1,
    progress: bool = False,
) -> TableReport:
    """Classify every connected graph on n vertices."""
    check_bound(n, TABLE_BOUND, "Vertex count")
    graphs = enumerate_graphs(n, connected_only=True)
    records = parallel_map(
        partial(classify, max_degree=max_degree), graphs, workers, progress, desc=f"table n={n}"
    )

    counts = {flag: sum(1 for r in records if getattr(r, flag)) for flag in CLASS_FLAGS}
    keys = [json.dumps(r.to_dict(), sort_keys=True) for r in records]
    code, name = build_report_code_and_name("table", n, max_degree, keys)
    logger.info("%s: %d graphs", code, len(records))
    return TableReport(n, max_degree, records, counts, code, name)


# -------------------------
# Per-graph and per-poset facts
# -------------------------

GRAPH_FACTS = (
    "c4_p4_free",
    "trivially_perfect",
    "tree_orientation",
    "perfect",
    "complement_perfect",
    "threshold_constructive",
    "threshold_forbidden",
    "comparability",
    "hl_comparability",
    "bipartite",
    "almost_bipartite",
    "k4_free",
    "chordal",
    "strongly_koszul",
    "heredity",
)

POSET_FACTS = (
    "n_free",
    "hibi_strongly_koszul",
    "tree_by_definition",
    "tree_by_forbidden",
    "tree_by_wedge",
    "contains_wedge",
    "comparability_graph_ok",
    "transfer_consistent",
)

FAULTS = GRAPH_FACTS + POSET_FACTS


def _flip(facts: dict, fault: Optional[str]) -> dict:
    if fault in facts and isinstance(facts[fault], bool):
        facts[fault] = not facts[fault]
    return facts


def graph_facts(
    g: Graph,
    max_degree: int = DEFAULT_DEGREE_BOUND,
    fault: Optional[str] = None,
    compare_bound: Optional[int] = None,
) -> dict:
    """Recognizer outcomes for one graph; oracle facts only for connected graphs."""
    connected = is_connected(g)
    facts = {
        "graph6": graph6_encode(g),
        "n": g.n,
        "connected": connected,
        "c4_p4_free": is_c4_p4_free(g),
        "trivially_perfect": is_trivially_perfect_by_definition(g),
        "tree_orientation": tree_orientation(g) is not None,
        "perfect": is_perfect_desk(g),
        "complement_perfect": is_perfect_desk(complement(g)),
        "threshold_constructive": is_threshold_constructive(g),
        "threshold_forbidden": is_threshold_forbidden(g),
        "comparability": is_comparability(g),
        "hl_comparability": is_hl_comparability(g),
        "bipartite": is_bipartite(g),
        "almost_bipartite": is_almost_bipartite(g),
        "chordal": is_chordal(g),
        "invariants": invariant_bundle(g).to_dict(),
        "strongly_koszul": None,
        "strongly_koszul_compare": None,
        "heredity": None,
    }
    facts["k4_free"] = facts["invariants"]["omega"] < 4

    if connected:
        facts["strongly_koszul"] = graph_is_strongly_koszul(g, max_degree)
        if compare_bound is not None:
            facts["strongly_koszul_compare"] = graph_is_strongly_koszul(g, compare_bound)
        if facts["trivially_perfect"] and g.n <= HEREDITY_BOUND:
            facts["heredity"] = heredity_check(g, max_degree)
    return _flip(facts, fault)


def poset_facts(p: Poset, max_degree: int = DEFAULT_DEGREE_BOUND, fault: Optional[str] = None) -> dict:
    facts = {
        "poset": json.dumps(poset_to_json(p)),
        "n": p.n,
        "n_free": contains_pattern(p, PatternKind.N) is None,
        "hibi_strongly_koszul": None,
        "tree_by_definition": is_tree_poset_by_definition(p),
        "tree_by_forbidden": is_tree_poset_by_forbidden(p),
        "tree_by_wedge": is_tree_poset_by_wedge(p),
        "contains_wedge": contains_pattern(p, PatternKind.WEDGE) is not None,
        "comparability_graph_ok": is_comparability(comparability_graph(p)),
        "transfer_consistent": None,
    }
    if p.n <= HIBI_POSET_BOUND:
        facts["hibi_strongly_koszul"] = is_strongly_koszul(hibi_ring(p), max_degree).strongly_koszul
    if p.n <= TRANSFER_POSET_BOUND and contains_pattern(p, PatternKind.X) is None:
        facts["transfer_consistent"] = transfer_consistency(p)
    return _flip(facts, fault)


# -------------------------
# Theorem checks
# -------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    description: str
    passed: bool
    checked: int
    counterexample: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "description": self.description,
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class VerificationReport:
    n: int
    degree_bound: int
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "degree_bound": self.degree_bound,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"Verification up to n={self.n}, degree bound {self.degree_bound}", ""]
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            line = f"{status}  {c.name:<22} {c.checked:>5}  {c.description}"
            if c.counterexample:
                line += f"  [counterexample: {c.counterexample}]"
            lines.append(line)
        lines.append("")
        lines.append("all checks passed" if self.passed else f"{len(self.failures)} check(s) failed")
        return "\n".join(lines)


def _check(
    name: str,
    description: str,
    subjects: Iterable[dict],
    predicate: Callable[[dict], Optional[bool]],
    key: str = "graph6",
) -> CheckResult:
    """predicate returns None when a subject is out of scope for the check."""
    checked = 0
    for subject in subjects:
        outcome = predicate(subject)
        if outcome is None:
            continue
        checked += 1
        if not outcome:
            return CheckResult(name, description, False, checked, subject[key])
    return CheckResult(name, description, True, checked)


def _when(condition: bool, outcome: bool) -> Optional[bool]:
    return outcome if condition else None


def _partitions(total: int, largest: int) -> Iterable[List[int]]:
    if total == 0:
        yield []
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield [part] + rest


def _graph_checks(facts: List[dict], compare_bound: Optional[int]) -> List[CheckResult]:
    checks = [
        _check(
            "strong_koszul",
            "connected G: k[Q_G] strongly Koszul iff G is C4,P4-free",
            facts,
            lambda f: _when(f["connected"], f["strongly_koszul"] == f["c4_p4_free"]),
        ),
        _check(
            "trivially_perfect",
            "alpha = m on all induced subgraphs iff C4,P4-free",
            facts,
            lambda f: f["trivially_perfect"] == f["c4_p4_free"],
        ),
        _check(
            "tree_orientation",
            "connected G: trivially perfect iff C4,P4-free iff a tree poset orientation exists",
            facts,
            lambda f: _when(
                f["connected"],
                f["trivially_perfect"] == f["c4_p4_free"] == f["tree_orientation"],
            ),
        ),
        _check(
            "trivially_perfect_perfect",
            "trivially perfect graphs are perfect",
            facts,
            lambda f: not f["trivially_perfect"] or f["perfect"],
        ),
        _check(
            "weak_perfect",
            "G is perfect iff its complement is perfect",
            facts,
            lambda f: f["perfect"] == f["complement_perfect"],
        ),
        _check(
            "heredity",
            "strongly Koszul k[Q_G] passes to every induced subgraph",
            facts,
            lambda f: f["heredity"],
        ),
        _check(
            "threshold",
            "constructive threshold iff C4,P4,2K2-free",
            facts,
            lambda f: f["threshold_constructive"] == f["threshold_forbidden"],
        ),
        _check(
            "threshold_implies_tp",
            "threshold graphs are trivially perfect",
            facts,
            lambda f: not f["threshold_constructive"] or f["trivially_perfect"],
        ),
        _check(
            "hl_small",
            "n <= 5: HL-comparability iff comparability",
            facts,
            lambda f: _when(
                f["n"] <= SMALL_GRAPH_BOUND, f["hl_comparability"] == f["comparability"]
            ),
        ),
        _check(
            "almost_bipartite_small",
            "n <= 5: almost bipartite iff K4-free",
            facts,
            lambda f: _when(f["n"] <= SMALL_GRAPH_BOUND, f["almost_bipartite"] == f["k4_free"]),
        ),
        _check(
            "class_implications",
            "threshold => tp => perfect; HL => comparability; bipartite => comparability",
            facts,
            lambda f: (
                (not f["threshold_constructive"] or f["trivially_perfect"])
                and (not f["trivially_perfect"] or f["perfect"])
                and (not f["hl_comparability"] or f["comparability"])
                and (not f["bipartite"] or f["comparability"])
            ),
        ),
        _check(
            "invariant_bounds",
            "alpha <= theta <= m, omega <= chi, chordal => m <= n",
            facts,
            lambda f: (
                f["invariants"]["alpha"] <= f["invariants"]["theta"] <= f["invariants"]["m"]
                and f["invariants"]["omega"] <= f["invariants"]["chi"]
                and (not f["chordal"] or f["invariants"]["m"] <= f["n"])
            ),
        ),
    ]
    if compare_bound is not None:
        checks.append(
            _check(
                "degree_bound_stability",
                f"oracle verdicts agree at degree bound {compare_bound}",
                facts,
                lambda f: _when(
                    f["connected"], f["strongly_koszul"] == f["strongly_koszul_compare"]
                ),
            )
        )
    return checks


def _poset_checks(facts: List[dict]) -> List[CheckResult]:
    return [
        _check(
            "hibi_n_free",
            "R_k[P] strongly Koszul iff P avoids the N pattern",
            facts,
            lambda f: _when(
                f["hibi_strongly_koszul"] is not None, f["hibi_strongly_koszul"] == f["n_free"]
            ),
            key="poset",
        ),
        _check(
            "tree_poset_patterns",
            "tree posets avoid X, N and the diamond; mismatches contain the wedge",
            facts,
            lambda f: (not f["tree_by_definition"] or f["tree_by_forbidden"])
            and (f["tree_by_definition"] == f["tree_by_forbidden"] or f["contains_wedge"]),
            key="poset",
        ),
        _check(
            "tree_poset_wedge",
            "tree poset iff the wedge pattern is absent",
            facts,
            lambda f: f["tree_by_definition"] == f["tree_by_wedge"],
            key="poset",
        ),
        _check(
            "poset_comparability",
            "comparability graphs of posets are comparability graphs",
            facts,
            lambda f: f["comparability_graph_ok"],
            key="poset",
        ),
        _check(
            "transfer",
            "X-free P: relations of R_k[P] and k[Q_G(P)] correspond",
            facts,
            lambda f: f["transfer_consistent"],
            key="poset",
        ),
    ]


def _multipartite_check(n: int) -> CheckResult:
    facts = []
    for total in range(1, n + 1):
        for sizes in _partitions(total, total):
            g = complete_multipartite(sizes)
            singletons = sum(1 for s in sizes if s == 1)
            facts.append(
                {
                    "graph6": f"{graph6_encode(g)} parts={sizes}",
                    "ok": is_hl_comparability(g) == (singletons >= len(sizes) - 2),
                }
            )
    return _check(
        "hl_multipartite",
        "complete r-partite: HL-comparability iff at least r-2 singleton parts",
        facts,
        lambda f: f["ok"],
    )


def _named_checks(n: int, max_degree: int) -> List[CheckResult]:
    if n < 4:
        return []

    two_k2 = disjoint_union(path_graph(2), path_graph(2))
    witness_facts = []
    for name, g in (("C4", cycle_graph(4)), ("P4", path_graph(4))):
        ring = stable_ring(g)
        verdict = is_strongly_koszul(ring, max_degree)
        ok = (
            not verdict.strongly_koszul
            and verdict.witness.degree == 3
            and verify_witness(ring, verdict.witness)
        )
        witness_facts.append({"graph6": name, "ok": ok})

    return [
        _check(
            "two_k2",
            "2K2 is trivially perfect but not threshold",
            [{"graph6": graph6_encode(two_k2), "g": two_k2}],
            lambda f: is_trivially_perfect_by_definition(f["g"])
            and not is_threshold_constructive(f["g"]),
        ),
        _check(
            "c4_p4_witnesses",
            "C4 and P4 fail with re-verifiable degree-3 witnesses",
            witness_facts,
            lambda f: f["ok"],
        ),
    ]


def verify_theorems(
    n: int,
    max_degree: int = DEFAULT_DEGREE_BOUND,
    workers: int = 1,
    progress: bool = False,
    fault: Optional[str] = None,
    compare_bound: Optional[int] = None,
) -> VerificationReport:
    """
    Run every cross-check over all graphs with at most n vertices and all
    posets up to the poset bounds. fault names a fact to negate everywhere.
    """
    check_bound(n, TABLE_BOUND, "Vertex count")
    if n < 1:
        raise KoszulGraphsError("Verification needs n >= 1.")
    if fault is not None and fault not in FAULTS:
        raise KoszulGraphsError(f"Unknown fault {fault!r}; choose one of {', '.join(FAULTS)}.")

    graphs = [g for m in range(1, n + 1) for g in enumerate_graphs(m)]
    facts = parallel_map(
        partial(graph_facts, max_degree=max_degree, fault=fault, compare_bound=compare_bound),
        graphs,
        workers,
        progress,
        desc="graphs",
    )

    posets = [
        p for m in range(1, min(n, POSET_ENUMERATION_BOUND) + 1) for p in enumerate_posets(m)
    ]
    p_facts = parallel_map(
        partial(poset_facts, max_degree=max_degree, fault=fault),
        posets,
        workers,
        progress,
        desc="posets",
    )

    checks = _graph_checks(facts, compare_bound)
    checks += _poset_checks(p_facts)
    checks.append(_multipartite_check(n))
    checks += _named_checks(n, max_degree)

    report = VerificationReport(n, max_degree, checks)
    for failure in report.failures:
        logger.warning("Check %s failed at %s", failure.name, failure.counterexample)
    return report
