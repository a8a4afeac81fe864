"""Graph corpora: exhaustive labeled enumerations, Pruefer tree sweeps,
fixed-seed random samples, named families, and graph6 files.

A corpus is named by a compact string so the command line and the report
files agree on what was checked:

    labeled:<n>              every labeled graph on n vertices (n <= 8)
    labeled:<n>:connected    the connected ones only
    trees:<n>                every labeled tree on n vertices (n <= 12)
    sampled:<n>:<count>      fixed-seed random graphs, mixed densities
    families:<lo>-<hi>       named parametric families for each n in range
    file:<path>              graph6 lines from a file

A trailing :dedup on labeled or tree corpora drops graphs isomorphic to an
earlier one (n <= 8; claim verdicts are isomorphism-invariant, so this only
shrinks graphs_checked).

Labeled graphs enumerate in edge-mask order (bit b of the mask is the b-th
pair in column order, matching the graph6 bit layout); trees enumerate in
Pruefer index order. Both orders are what the compiled kernels walk, so an
index reported by a block scan names the same graph here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _kernel
from .errors import CapacityError, ParameterError
from .families import named_families
from .graph6 import iter_graph6_lines, to_graph6
from .graphs import Graph, graph_from_edge_mask, is_connected
from .structure import _profiles, is_isomorphic

LABELED_MAX_N = 8
TREES_MAX_N = 12
SAMPLED_MAX_N = 32
FAMILIES_MAX_N = 32
_SAMPLE_DENSITIES = (0.25, 0.4, 0.5, 0.6, 0.75)


@dataclass(frozen=True)
class CorpusSpec:
    raw: str
    kind: str
    n: int = 0
    connected_only: bool = False
    path: str = ""
    lo: int = 0
    hi: int = 0
    count: int = 0
    dedup: bool = False


DEDUP_MAX_N = 8


def _int_field(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParameterError(f"{what} must be an integer, got {text!r}") from None


def _split_dedup(parts: list[str]) -> tuple[list[str], bool]:
    if parts and parts[-1] == "dedup":
        return parts[:-1], True
    return parts, False


def parse_corpus(text: str) -> CorpusSpec:
    kind, _, rest = text.partition(":")
    if kind == "labeled":
        parts, dedup = _split_dedup(rest.split(":") if rest else [])
        if not 1 <= len(parts) <= 2 or (len(parts) == 2 and parts[1] != "connected"):
            raise ParameterError(
                "labeled corpus is labeled:<n>[:connected][:dedup], "
                f"got {text!r}")
        n = _int_field(parts[0], "labeled corpus size")
        if not 1 <= n <= LABELED_MAX_N:
            raise CapacityError(
                f"labeled corpora cover 1 <= n <= {LABELED_MAX_N}, got {n}")
        if dedup and n > DEDUP_MAX_N:
            raise CapacityError(
                f"isomorphism dedup covers n <= {DEDUP_MAX_N}, got {n}")
        return CorpusSpec(raw=text, kind=kind, n=n,
                          connected_only=len(parts) == 2, dedup=dedup)
    if kind == "trees":
        parts, dedup = _split_dedup(rest.split(":") if rest else [])
        if len(parts) != 1:
            raise ParameterError(f"tree corpus is trees:<n>[:dedup], got {text!r}")
        n = _int_field(parts[0], "tree corpus size")
        if not 1 <= n <= TREES_MAX_N:
            raise CapacityError(
                f"tree corpora cover 1 <= n <= {TREES_MAX_N}, got {n}")
        if dedup and n > DEDUP_MAX_N:
            raise CapacityError(
                f"isomorphism dedup covers n <= {DEDUP_MAX_N}, got {n}")
        return CorpusSpec(raw=text, kind=kind, n=n, dedup=dedup)
    if kind == "sampled":
        head, sep, tail = rest.partition(":")
        if not sep:
            raise ParameterError("sampled corpus needs sampled:<n>:<count>")
        n = _int_field(head, "sampled corpus size")
        count = _int_field(tail, "sample count")
        if not 1 <= n <= SAMPLED_MAX_N:
            raise CapacityError(
                f"sampled corpora cover 1 <= n <= {SAMPLED_MAX_N}, got {n}")
        if count < 1:
            raise ParameterError(f"sample count must be positive, got {count}")
        return CorpusSpec(raw=text, kind=kind, n=n, count=count)
    if kind == "families":
        head, sep, tail = rest.partition("-")
        if not sep:
            raise ParameterError("families corpus needs families:<lo>-<hi>")
        lo = _int_field(head, "families lower bound")
        hi = _int_field(tail, "families upper bound")
        if not 1 <= lo <= hi:
            raise ParameterError(f"families range {lo}-{hi} is empty or bad")
        if hi > FAMILIES_MAX_N:
            raise CapacityError(
                f"families corpora cover n <= {FAMILIES_MAX_N}, got {hi}")
        return CorpusSpec(raw=text, kind=kind, lo=lo, hi=hi)
    if kind == "file":
        if not rest:
            raise ParameterError("file corpus needs file:<path>")
        return CorpusSpec(raw=text, kind=kind, path=rest)
    raise ParameterError(
        f"unknown corpus kind {kind!r}; expected labeled, trees, sampled, "
        "families, or file")


def tree_count(n: int) -> int:
    return 1 if n == 1 else n ** (n - 2)


def corpus_size(spec: CorpusSpec) -> int | None:
    """Number of graphs, when it is known without enumerating."""
    if spec.dedup:
        return None
    if spec.kind == "labeled" and not spec.connected_only:
        return 1 << (spec.n * (spec.n - 1) // 2)
    if spec.kind == "trees":
        return tree_count(spec.n)
    if spec.kind == "sampled":
        return spec.count
    return None


def sample_graph(n: int, rng: random.Random, density: float) -> Graph:
    rows = [0] * n
    for v in range(1, n):
        for u in range(v):
            if rng.random() < density:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, rows)


def sampled_graphs(n: int, count: int, seed: int) -> Iterator[Graph]:
    """Fixed-seed random graphs cycling through a few edge densities."""
    rng = random.Random(seed * 1000003 + n)
    for i in range(count):
        yield sample_graph(n, rng, _SAMPLE_DENSITIES[i % len(_SAMPLE_DENSITIES)])


def enumerate_labeled(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All labeled graphs on n vertices, in edge-mask order."""
    if not 1 <= n <= LABELED_MAX_N:
        raise CapacityError(
            f"labeled enumeration covers 1 <= n <= {LABELED_MAX_N}, got {n}")
    for mask in range(1 << (n * (n - 1) // 2)):
        g = graph_from_edge_mask(n, mask)
        if connected_only and not is_connected(g):
            continue
        yield g


def enumerate_trees(n: int) -> Iterator[Graph]:
    """All labeled trees on n vertices, in Pruefer-sequence order."""
    if not 1 <= n <= TREES_MAX_N:
        raise CapacityError(
            f"tree enumeration covers 1 <= n <= {TREES_MAX_N}, got {n}")
    for index in range(tree_count(n)):
        yield Graph(n, _kernel.tree_rows(n, index))


def iter_graphs(spec: CorpusSpec, *, seed: int = 0) -> Iterator[tuple[str, Graph]]:
    """Yield (graph6, Graph) pairs in the corpus's canonical order."""
    pairs = _iter_graphs_raw(spec, seed)
    return dedup_graphs(pairs) if spec.dedup else pairs


def _iter_graphs_raw(spec: CorpusSpec, seed: int) -> Iterator[tuple[str, Graph]]:
    if spec.kind == "labeled":
        n = spec.n
        for mask in range(1 << (n * (n - 1) // 2)):
            g = graph_from_edge_mask(n, mask)
            if spec.connected_only and not is_connected(g):
                continue
            yield to_graph6(g), g
    elif spec.kind == "trees":
        n = spec.n
        for index in range(tree_count(n)):
            g = Graph(n, _kernel.tree_rows(n, index))
            yield to_graph6(g), g
    elif spec.kind == "sampled":
        for g in sampled_graphs(spec.n, spec.count, seed):
            yield to_graph6(g), g
    elif spec.kind == "families":
        for n in range(spec.lo, spec.hi + 1):
            for _name, g in named_families(n):
                yield to_graph6(g), g
    elif spec.kind == "file":
        with open(spec.path, encoding="ascii") as fh:
            for _lineno, g in iter_graph6_lines(fh):
                yield to_graph6(g), g
    else:  # pragma: no cover - parse_corpus rejects unknown kinds
        raise ParameterError(f"unknown corpus kind {spec.kind!r}")


def dedup_graphs(pairs: Iterable[tuple[str, Graph]]) -> Iterator[tuple[str, Graph]]:
    """Drop graphs isomorphic to an earlier one in the stream.

    Buckets by cheap invariants first, then confirms with the isomorphism
    search, so it is only usable where that search is (n <= 12).
    """
    buckets: dict[tuple, list[Graph]] = {}
    for label, g in pairs:
        key = (g.n, g.num_edges(), tuple(sorted(_profiles(g))))
        seen = buckets.setdefault(key, [])
        if any(is_isomorphic(g, h) for h in seen):
            continue
        seen.append(g)
        yield label, g
