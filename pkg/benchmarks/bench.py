#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python reference.

Each workload runs in a subprocess with STEINERDIAM_BACKEND forced, so the
two backends are timed under identical import paths. Sizes are chosen to
finish in a few seconds on the Python side; pass --scale to grow them.

Usage: python3 benchmarks/bench.py [--scale N] [--repeat R]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from steinerdiam import _kernel

name, scale = sys.argv[1], int(sys.argv[2])

def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out

if name == "steiner_table":
    # One full 2^n Steiner-distance table for a circulant graph.
    n = 12
    rows = [0] * n
    for v in range(n):
        for d in (1, 2, 3):
            rows[v] |= 1 << ((v + d) % n)
            rows[v] |= 1 << ((v - d) % n)
    dt = 0.0
    for _ in range(scale):
        step, table = timed(_kernel.steiner_table, n, rows)
        dt += step
    checksum = int(sum(table) % 1000003)
elif name == "profile_block":
    # Full invariant profiles over labeled graphs on 5 vertices.
    wants = (_kernel.W_TABLE_G | _kernel.W_TABLE_C | _kernel.W_SD3
             | _kernel.W_CUTS | _kernel.W_CIRC | _kernel.W_LEM0
             | _kernel.W_RECOG | _kernel.W_ORACLE | _kernel.W_MEDIAN)
    dt, checksum = 0.0, 0
    for _ in range(scale):
        step, block = timed(_kernel.profile_block, 5, 0, 1 << 10, wants)
        dt += step
        checksum = int(block["sdiam_g"].sum()) % 1000003
elif name == "tree_scan":
    # Leaf counts and the extension identity over labeled trees on 8 vertices.
    count = 4096 * scale
    dt, res = timed(_kernel.tree_scan, 8, 0, min(count, 8 ** 6), True, True, 8)
    checksum = int(res["count"])
else:
    raise SystemExit(f"unknown workload {name}")

print(json.dumps({"seconds": dt, "checksum": checksum}))
"""

WORKLOADS = ("steiner_table", "profile_block", "tree_scan")


def run_one(backend: str, name: str, scale: int) -> dict:
    env = dict(os.environ, STEINERDIAM_BACKEND=backend)
    out = subprocess.run(
        [sys.executable, "-c", WORKER, name, str(scale)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--scale", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=1,
                    help="repetitions; the best time is reported")
    args = ap.parse_args()

    try:
        run_one("c", WORKLOADS[0], 1)
    except subprocess.CalledProcessError:
        print("compiled kernel unavailable; nothing to compare", file=sys.stderr)
        return 1

    print(f"{'workload':<16} {'python':>10} {'c':>10} {'speedup':>9}")
    for name in WORKLOADS:
        best = {}
        for backend in ("python", "c"):
            times = []
            for _ in range(args.repeat):
                res = run_one(backend, name, args.scale)
                times.append(res["seconds"])
                best.setdefault("checksum_" + backend, res["checksum"])
            best[backend] = min(times)
        if best["checksum_python"] != best["checksum_c"]:
            print(f"{name}: backends disagree!", file=sys.stderr)
            return 1
        ratio = best["python"] / best["c"] if best["c"] > 0 else float("inf")
        print(f"{name:<16} {best['python']:>9.3f}s {best['c']:>9.3f}s "
              f"{ratio:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
