"""Command-line front end.

Subcommands: metrics, classify, generate, verify, oracle-diff. Graphs are
passed as graph6 strings, or as @path to read a one-line graph6 file
(batches go through `verify --corpus file:PATH`).

Exit codes are a stable contract: 0 success, 1 a claim violation or a
classifier discrepancy, 2 parse or usage errors, 3 domain or capacity
errors, 4 I/O failures.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from itertools import combinations

from . import __version__
from .claims import claim_ids
from .errors import (
    CapacityError,
    DomainError,
    GraphDecodeError,
    ParameterError,
)
from .families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    double_star,
    example2,
    path_graph,
    spider,
    star_graph,
    star_path,
    triangle_spider,
    triple_star,
)
from .graph6 import from_graph6, to_graph6
from .graphs import Graph, is_connected
from .recognizers import (
    Sdiam3Class,
    classify_sdiam3,
    recognize_spider,
    recognize_triangle_spider,
)
from .runner import reports_to_json, run_suite, write_reports
from .steiner import (
    diameter_witness,
    steiner_distance,
    steiner_distance_3,
    steiner_distance_oracle,
    steiner_eccentricities,
)

_ORACLE_MAX_N = 16


def _load_graph(text: str) -> Graph:
    if text.startswith("@"):
        with open(text[1:], encoding="ascii") as fh:
            lines = [line.strip() for line in fh if line.strip()]
        if len(lines) != 1:
            raise ParameterError(
                f"{text[1:]} holds {len(lines)} graph6 lines; this command "
                "takes one graph (use verify --corpus file:PATH for batches)")
        text = lines[0]
    return from_graph6(text)


def _enc(value) -> int | str:
    return "Infinite" if isinstance(value, float) and math.isinf(value) \
        else int(value)


def cmd_metrics(args) -> int:
    g = _load_graph(args.graph)
    k = args.k
    if not 2 <= k <= g.n:
        raise DomainError(f"k must be between 2 and n = {g.n}, got {k}")
    ecc = steiner_eccentricities(g, k)
    data = {
        "n": g.n,
        "k": k,
        "sdiam": _enc(max(ecc)),
        "srad": _enc(min(ecc)),
        "ecc": [_enc(e) for e in ecc],
    }
    if args.witness:
        terminals, edges = diameter_witness(g, k)
        data["witness"] = {
            "terminals": list(terminals),
            "edges": None if edges is None else [list(e) for e in edges],
        }
    print(json.dumps(data, indent=2))
    return 0


_CLASS_TEXT = {
    Sdiam3Class.TWO: "minimum degree at least n-2",
    Sdiam3Class.THREE: "complement has a vertex of degree 2 or more, no "
                       "spanning triple star, no covering 3-path pattern",
    Sdiam3Class.OTHER: "none (value outside the characterized set)",
}


def _expected_sdiam3(cls: Sdiam3Class, n: int) -> int | None:
    if cls is Sdiam3Class.TWO:
        return 2
    if cls is Sdiam3Class.THREE:
        return 3
    if cls is Sdiam3Class.N_MINUS_1:
        return n - 1
    return None


def cmd_classify(args) -> int:
    g = _load_graph(args.graph)
    if not is_connected(g):
        raise DomainError("classification needs a connected graph")
    cls = classify_sdiam3(g)
    legs = None
    if cls is Sdiam3Class.N_MINUS_1:
        params = recognize_spider(g)
        if params is not None:
            legs = list(params)
            recognizer = f"spider with leg lengths {tuple(params)}"
        else:
            tri = recognize_triangle_spider(g)
            legs = list(tri) if tri is not None else None
            recognizer = f"triangle spider with leg lengths {tuple(tri)}" \
                if tri is not None else "n-1 shape (no parameters extracted)"
    else:
        recognizer = _CLASS_TEXT[cls]
    ecc = steiner_eccentricities(g, 3) if g.n >= 3 else ()
    sdiam3 = max(ecc) if ecc else None
    expected = _expected_sdiam3(cls, g.n)
    if expected is None:
        agree = sdiam3 not in (2, 3, g.n - 1)
    else:
        agree = sdiam3 == expected
    if args.json:
        print(json.dumps({
            "n": g.n,
            "class": cls.value,
            "recognizer": recognizer,
            "legs": legs,
            "sdiam3": None if sdiam3 is None else _enc(sdiam3),
            "agree": agree,
        }, indent=2))
    else:
        print(f"class: {cls.name}")
        print(f"recognizer: {recognizer}")
        print(f"sdiam3: {'-' if sdiam3 is None else _enc(sdiam3)}")
        if agree:
            print("agreement: ok")
    if not agree:
        line = (f"DISCREPANCY: structural class {cls.name} does not match "
                f"the computed 3-set diameter {sdiam3}")
        print(line if args.json else f"!!! {line}", file=sys.stderr)
        return 1
    return 0


_FAMILY_FLAGS = [
    ("path", 1, path_graph, "path on N vertices"),
    ("cycle", 1, cycle_graph, "cycle on N vertices"),
    ("complete", 1, complete_graph, "complete graph on N vertices"),
    ("star", 1, star_graph, "star with N leaves"),
    ("complete-bipartite", 2, complete_bipartite, "complete bipartite S,T"),
    ("double-star", 2, double_star, "double star with S and T leaves"),
    ("spider", 3, spider, "spider with leg lengths A,B,C"),
    ("triangle-spider", 3, triangle_spider,
     "triangle with paths of lengths P,Q,R hung on its corners"),
    ("triple-star", 3, triple_star,
     "triangle with A,B,C leaves hung on its corners"),
    ("star-path", 1, star_path,
     "path on N vertices plus one vertex adjacent to everything"),
    ("example2-inner-complete", 1,
     lambda n: example2(complete_graph(n)),
     "four fixed vertices wired around an inner complete graph on N vertices"),
    ("example2-inner-cycle", 1,
     lambda n: example2(cycle_graph(n)),
     "four fixed vertices wired around an inner cycle on N vertices"),
]


def cmd_generate(args) -> int:
    chosen = [(name, arity, build) for name, arity, build, _help in _FAMILY_FLAGS
              if getattr(args, name.replace("-", "_")) is not None]
    if len(chosen) != 1:
        raise ParameterError("generate takes exactly one family flag")
    name, arity, build = chosen[0]
    raw = getattr(args, name.replace("-", "_"))
    parts = raw.split(",")
    if len(parts) != arity:
        raise ParameterError(
            f"--{name} takes {arity} comma-separated integers, got {raw!r}")
    try:
        params = [int(p) for p in parts]
    except ValueError:
        raise ParameterError(
            f"--{name} takes {arity} comma-separated integers, got {raw!r}"
        ) from None
    try:
        g = build(*params)
    except DomainError as exc:
        raise ParameterError(str(exc)) from None
    print(to_graph6(g))
    return 0


def cmd_verify(args) -> int:
    if args.claims.strip() == "all":
        ids = claim_ids()
    else:
        ids = [s.strip() for s in args.claims.split(",") if s.strip()]
        if not ids:
            raise ParameterError("--claims must name at least one claim")
    if args.threads is not None and args.threads < 1:
        raise ParameterError(f"--threads must be positive, got {args.threads}")
    reports = run_suite(ids, args.corpus, seed=args.seed,
                        threads=args.threads or 0)
    total = sum(r.violations_total for r in reports)
    paths = write_reports(reports, args.out) if args.out else None
    if args.json:
        print(reports_to_json(reports))
    else:
        for r in reports:
            print(f"{r.claim_id:<14} checked={r.graphs_checked} "
                  f"violations={r.violations_total} vacuous={r.vacuous}")
            for note in r.notes:
                print(f"    note: {note}")
            for v in r.violations[:10]:
                print(f"    violated by {v.graph}: {v.detail}")
        print("all claims verified" if total == 0
              else f"{total} violations found")
        if paths:
            print(f"reports written to {paths[0]} and {paths[1]}")
    return 1 if total else 0


def cmd_oracle_diff(args) -> int:
    g = _load_graph(args.graph)
    if g.n > _ORACLE_MAX_N:
        raise CapacityError(
            f"oracle comparison covers n <= {_ORACLE_MAX_N}, got {g.n}")
    k = args.k
    if not 2 <= k <= g.n:
        raise DomainError(f"k must be between 2 and n = {g.n}, got {k}")
    diffs = []
    for ts in combinations(range(g.n), k):
        dp = steiner_distance(g, ts)
        oracle = steiner_distance_oracle(g, ts)
        median = steiner_distance_3(g, *ts) if k == 3 else None
        if dp != oracle or (median is not None and median != dp):
            diffs.append((ts, dp, median, oracle))
    if args.json:
        print(json.dumps({
            "n": g.n,
            "k": k,
            "count": len(diffs),
            "discrepancies": [
                {"terminals": list(ts), "dp": _enc(dp),
                 "median": None if med is None else _enc(med),
                 "oracle": _enc(orc)}
                for ts, dp, med, orc in diffs
            ],
        }, indent=2))
    else:
        for ts, dp, med, orc in diffs:
            med_part = "" if med is None else f" median={_enc(med)}"
            print(f"terminals {list(ts)}: dp={_enc(dp)}{med_part} "
                  f"oracle={_enc(orc)}")
        print(f"{len(diffs)} discrepancies")
    return 1 if diffs else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="steinerdiam",
        description="Steiner distances, Steiner k-diameters, structural "
                    "classification, and theorem verification on small "
                    "graphs.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("metrics", help="Steiner k-diameter, k-radius, and "
                                       "per-vertex k-eccentricities")
    p.add_argument("graph", help="graph6 string or @file")
    p.add_argument("k", type=int)
    p.add_argument("--witness", action="store_true",
                   help="include a diameter-attaining terminal set and an "
                        "optimal tree for it")
    p.add_argument("--json", action="store_true",
                   help="accepted for symmetry; metrics always prints JSON")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("classify",
                       help="structural 3-set diameter class, cross-checked "
                            "against the computed value")
    p.add_argument("graph", help="graph6 string or @file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="emit a named family as graph6")
    for name, arity, _build, help_text in _FAMILY_FLAGS:
        p.add_argument(f"--{name}", metavar=",".join("N" * arity)
                       if arity > 1 else "N", help=help_text)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check claims over a corpus and "
                                      "write reports")
    p.add_argument("--claims", required=True,
                   help="comma-separated claim ids, or 'all'")
    p.add_argument("--corpus", required=True,
                   help="labeled:<n>[:connected], trees:<n>, "
                        "sampled:<n>:<count>, families:<lo>-<hi>, or "
                        "file:<path>; append :dedup to labeled/trees")
    p.add_argument("--out", help="prefix for the JSON and CSV report files")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for sampled corpora (default 0)")
    p.add_argument("--threads", type=int, default=None,
                   help="accepted for interface stability; runs are "
                        "sequential and deterministic")
    p.add_argument("--json", action="store_true",
                   help="print the full JSON reports instead of a summary")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-diff",
                       help="compare the Steiner-distance routes on every "
                            "k-subset of one graph")
    p.add_argument("graph", help="graph6 string or @file")
    p.add_argument("k", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle_diff)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphDecodeError, ParameterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
