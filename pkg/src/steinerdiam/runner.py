"""Theorem-suite runner: claims applied to corpora, reports out.

Three execution routes, picked per corpus:

* labeled corpora run through the kernel's edge-mask sweep in chunks, so
  exhaustive n <= 7 sweeps spend their time in compiled code;
* tree corpora whose requested claims are all tree-shaped (pro2, lemF) run
  through the kernel tree scan;
* everything else (samples, families, files, dedup'd corpora) streams
  Graph objects through the block builder in batches.

A claim whose statement starts at min_n still sees smaller graphs when the
corpus contains them. Claims marked scan_below are evaluated there anyway
and any mismatches are reported in informational_mismatches (with a note),
never as violations; the rest are skipped. Either way the rows count as
vacuous, so `graphs_checked = applicable + vacuous` stays true per claim.

wall_time on a report is the elapsed time of the whole run_suite call
(block construction is shared between claims, so per-claim attribution
would be arbitrary). Reports are deterministic apart from that field.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from . import _kernel
from .claims import (
    Claim,
    get_claims,
    tree_identity_witness,
)
from .corpus import CorpusSpec, iter_graphs, parse_corpus, tree_count
from .errors import CapacityError
from .graph6 import to_graph6
from .graphs import Graph, graph_from_edge_mask
from .profiles import _check_wants_capacity, build_block, kernel_block
from .steiner import steiner_report

_CHUNK_MASKS = 1 << 16
_TREE_CHUNK = 1 << 15
_BATCH_GRAPHS = 4096
_EMBED_CAP = 50
_KERNEL_TREE_MAX_N = 12


@dataclass
class TheoremVerdict:
    claim_id: str
    graph: str
    holds: bool
    detail: str = ""


@dataclass
class RunReport:
    claim_id: str
    corpus: str
    graphs_checked: int = 0
    vacuous: int = 0
    violations: list[TheoremVerdict] = field(default_factory=list)
    violations_total: int = 0
    informational_mismatches: int = 0
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def verified(self) -> bool:
        return self.violations_total == 0


class _Acc:
    """Per-claim accumulator feeding one RunReport."""

    def __init__(self, claim: Claim, corpus: str):
        self.claim = claim
        self.report = RunReport(claim_id=claim.claim_id, corpus=corpus)
        self.aux_total = 0

    def note(self, text: str) -> None:
        if text not in self.report.notes:
            self.report.notes.append(text)

    def add_violation(self, graph6: str, detail: str) -> None:
        rep = self.report
        rep.violations_total += 1
        if len(rep.violations) < 4 * _EMBED_CAP:
            rep.violations.append(
                TheoremVerdict(self.claim.claim_id, graph6, False, detail))

    def count_rows(self, total: int, applicable: int) -> None:
        self.report.graphs_checked += total
        self.report.vacuous += total - applicable

    def finalize(self, wall_time: float) -> RunReport:
        rep = self.report
        rep.violations.sort(key=lambda v: (v.graph, v.detail))
        if rep.violations_total > _EMBED_CAP:
            rep.violations = rep.violations[:_EMBED_CAP]
            self.note(f"only {_EMBED_CAP} of {rep.violations_total} "
                      "violations are embedded")
        if self.aux_total and self.claim.aux_label:
            self.note(f"{self.claim.aux_label}: {self.aux_total}")
        if rep.informational_mismatches:
            self.note(f"{rep.informational_mismatches} below-range mismatches "
                      "recorded informationally, not as violations")
        rep.wall_time = wall_time
        return rep


def _below_range_note(claim: Claim, n: int) -> str:
    return (f"n={n} is below the stated range (n >= {claim.min_n}); "
            f"rows counted as vacuous")


def _apply_block_claim(acc: _Acc, b, label_of, corpus_mask) -> None:
    claim = acc.claim
    total = b.count if corpus_mask is None else int(corpus_mask.sum())
    if total == 0:
        return
    if b.n < claim.min_n:
        acc.count_rows(total, 0)
        acc.note(_below_range_note(claim, b.n))
        if claim.scan_below:
            app, holds = claim.check(b)
            if corpus_mask is not None:
                app = app & corpus_mask
            acc.report.informational_mismatches += int((app & ~holds).sum())
        return
    app, holds = claim.check(b)
    if corpus_mask is not None:
        app = app & corpus_mask
    acc.count_rows(total, int(app.sum()))
    bad = np.flatnonzero(app & ~holds)
    for i in bad:
        i = int(i)
        detail = claim.detail(b, i) if claim.detail else ""
        acc.add_violation(label_of(i), detail)
    if claim.aux_count is not None:
        acc.aux_total += claim.aux_count(b, app)


def _apply_per_graph_claim(acc: _Acc, b, label_of, graph_of, corpus_mask) -> None:
    claim = acc.claim
    total = b.count if corpus_mask is None else int(corpus_mask.sum())
    if total == 0:
        return
    if b.n < claim.min_n:
        acc.count_rows(total, 0)
        acc.note(_below_range_note(claim, b.n))
        return
    if b.n > claim.per_graph_max_n:
        acc.count_rows(total, 0)
        acc.note(f"n={b.n} exceeds this check's capacity "
                 f"(n <= {claim.per_graph_max_n}); rows counted as vacuous")
        return
    if claim.claim_id == "lemF" and b.n > 8:
        acc.note("terminal sets capped at size <= 4 for n > 8")
    cand = claim.block_filter(b) if claim.block_filter is not None \
        else np.ones(b.count, dtype=bool)
    if corpus_mask is not None:
        cand = cand & corpus_mask
    applicable = 0
    for i in np.flatnonzero(cand):
        i = int(i)
        verdict = claim.per_graph(graph_of(i))
        if not verdict.applicable:
            continue
        applicable += 1
        if not verdict.holds:
            acc.add_violation(label_of(i), _per_graph_detail(claim, graph_of(i)))
    acc.count_rows(total, applicable)


def _per_graph_detail(claim: Claim, g: Graph) -> str:
    if claim.claim_id == "lemF":
        wit = tree_identity_witness(g)
        if wit is None:
            return "identity fails in the scan but no witness found at this cap"
        terms, v, actual, predicted = wit
        return (f"terminals {list(terms)} plus vertex {v}: distance {actual}, "
                f"predicted {predicted}")
    return ""


def _run_labeled(accs: list[_Acc], spec: CorpusSpec) -> None:
    n = spec.n
    total_masks = 1 << (n * (n - 1) // 2)
    block_accs = [a for a in accs if a.claim.check is not None]
    graph_accs = [a for a in accs if a.claim.check is None]
    wants = 0
    for a in block_accs:
        wants |= a.claim.wants
    for start in range(0, total_masks, _CHUNK_MASKS):
        count = min(_CHUNK_MASKS, total_masks - start)
        b = kernel_block(n, start, count, wants)
        corpus_mask = b.conn_g if spec.connected_only else None

        def label_of(i: int, _start=start) -> str:
            return to_graph6(graph_from_edge_mask(n, _start + i))

        def graph_of(i: int, _start=start) -> Graph:
            return graph_from_edge_mask(n, _start + i)

        for a in block_accs:
            _apply_block_claim(a, b, label_of, corpus_mask)
        for a in graph_accs:
            _apply_per_graph_claim(a, b, label_of, graph_of, corpus_mask)


def _tree_graph(n: int, index: int) -> Graph:
    return Graph(n, _kernel.tree_rows(n, index))


def _pro2_tree_detail(g: Graph) -> str:
    leaves = g.degrees().count(1)
    rep = steiner_report(g)
    vec = [rep.diameter[k] for k in sorted(rep.diameter)]
    return f"n={g.n}, leaves={leaves}, sdiam(k=2..n)={vec}"


def _run_tree_scan(accs: list[_Acc], spec: CorpusSpec) -> None:
    n = spec.n
    total = tree_count(n)
    want_pro2 = any(a.claim.claim_id == "pro2" for a in accs)
    want_lemf = any(a.claim.claim_id == "lemF" for a in accs)
    # The compiled scan affords the full subset lattice through n = 9;
    # beyond that the identity is spot-checked on sets of up to 4 terminals.
    lemf_max_s = n if n <= 9 else 4
    by_id = {a.claim.claim_id: a for a in accs}
    for start in range(0, total, _TREE_CHUNK):
        count = min(_TREE_CHUNK, total - start)
        res = _kernel.tree_scan(n, start, count, want_pro2, want_lemf,
                                lemf_max_s)
        if want_pro2:
            acc = by_id["pro2"]
            acc.count_rows(count, count)
            acc.report.violations_total += int(res["pro2_viol_total"]) \
                - len(res["pro2_viol"])
            for idx in res["pro2_viol"]:
                g = _tree_graph(n, int(idx))
                acc.add_violation(to_graph6(g), _pro2_tree_detail(g))
        if want_lemf:
            acc = by_id["lemF"]
            acc.count_rows(count, count)
            if n > 9:
                acc.note("terminal sets capped at size <= 4 for n > 9")
            acc.report.violations_total += int(res["lemf_viol_total"]) \
                - len(res["lemf_viol"])
            for idx in res["lemf_viol"]:
                g = _tree_graph(n, int(idx))
                wit = tree_identity_witness(g, lemf_max_s)
                detail = ("no witness found at this cap" if wit is None else
                          f"terminals {list(wit[0])} plus vertex {wit[1]}: "
                          f"distance {wit[2]}, predicted {wit[3]}")
                acc.add_violation(to_graph6(g), detail)


def _flush_batch(accs: list[_Acc], n: int,
                 pairs: list[tuple[str, Graph]]) -> None:
    if not pairs:
        return
    graphs = [g for _label, g in pairs]
    block_accs = []
    wants = 0
    for a in accs:
        if a.claim.check is None:
            continue
        run_below = a.claim.scan_below and a.claim.check is not None
        if n < a.claim.min_n and not run_below:
            # _apply_block_claim only notes and counts; no columns needed.
            block_accs.append(a)
            continue
        try:
            _check_wants_capacity(n, a.claim.wants)
        except CapacityError as exc:
            a.count_rows(len(pairs), 0)
            a.note(f"{exc}; rows counted as vacuous")
            continue
        wants |= a.claim.wants
        block_accs.append(a)
    graph_accs = [a for a in accs if a.claim.check is None]
    b = build_block(n, graphs, wants)

    def label_of(i: int) -> str:
        return pairs[i][0]

    def graph_of(i: int) -> Graph:
        return pairs[i][1]

    for a in block_accs:
        _apply_block_claim(a, b, label_of, None)
    for a in graph_accs:
        _apply_per_graph_claim(a, b, label_of, graph_of, None)


def _run_stream(accs: list[_Acc], spec: CorpusSpec, seed: int) -> None:
    batch: list[tuple[str, Graph]] = []
    cur_n = -1
    for label, g in iter_graphs(spec, seed=seed):
        if g.n != cur_n or len(batch) >= _BATCH_GRAPHS:
            _flush_batch(accs, cur_n, batch)
            batch = []
            cur_n = g.n
        batch.append((label, g))
    _flush_batch(accs, cur_n, batch)


def run_suite(claim_ids: list[str], corpus: str | CorpusSpec, *,
              seed: int = 0, threads: int = 0) -> list[RunReport]:
    """Check the named claims over a corpus; one report per claim.

    `corpus` is a CorpusSpec or its string form (see the corpus module).
    `seed` only affects sampled corpora. `threads` is accepted for
    interface stability; execution is sequential either way, which is one
    of the legal schedules of the declared per-graph-independent model and
    keeps reports deterministic.
    """
    del threads
    spec = corpus if isinstance(corpus, CorpusSpec) else parse_corpus(corpus)
    claims = get_claims(claim_ids)
    accs = [_Acc(c, spec.raw) for c in claims]
    started = time.perf_counter()
    if spec.kind == "labeled" and not spec.dedup:
        _run_labeled(accs, spec)
    elif (spec.kind == "trees" and not spec.dedup
          and 2 <= spec.n <= _KERNEL_TREE_MAX_N
          and all(a.claim.tree_scan for a in accs)):
        _run_tree_scan(accs, spec)
    else:
        _run_stream(accs, spec, seed)
    wall = time.perf_counter() - started
    return [a.finalize(wall) for a in accs]


def verdict_to_dict(v: TheoremVerdict) -> dict:
    return {"claim_id": v.claim_id, "graph": v.graph, "holds": v.holds,
            "detail": v.detail}


def report_to_dict(r: RunReport) -> dict:
    return {
        "claim_id": r.claim_id,
        "corpus": r.corpus,
        "graphs_checked": r.graphs_checked,
        "vacuous": r.vacuous,
        "violations_total": r.violations_total,
        "informational_mismatches": r.informational_mismatches,
        "violations": [verdict_to_dict(v) for v in r.violations],
        "notes": list(r.notes),
        "wall_time": r.wall_time,
    }


def reports_to_json(reports: list[RunReport]) -> str:
    return json.dumps([report_to_dict(r) for r in reports], indent=2)


def reports_to_csv(reports: list[RunReport]) -> str:
    lines = ["claim_id,corpus,checked,violations,vacuous"]
    for r in reports:
        corpus = r.corpus
        if "," in corpus or '"' in corpus:
            corpus = '"' + corpus.replace('"', '""') + '"'
        lines.append(f"{r.claim_id},{corpus},{r.graphs_checked},"
                     f"{r.violations_total},{r.vacuous}")
    return "\n".join(lines) + "\n"


def write_reports(reports: list[RunReport], out_prefix: str) -> tuple[str, str]:
    """Write <prefix>.json and <prefix>.csv; returns the two paths."""
    if out_prefix.endswith(".json") or out_prefix.endswith(".csv"):
        out_prefix = out_prefix.rsplit(".", 1)[0]
    json_path = out_prefix + ".json"
    csv_path = out_prefix + ".csv"
    with open(json_path, "w", encoding="ascii") as fh:
        fh.write(reports_to_json(reports))
        fh.write("\n")
    with open(csv_path, "w", encoding="ascii") as fh:
        fh.write(reports_to_csv(reports))
    return json_path, csv_path
