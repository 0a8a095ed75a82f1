#!/usr/bin/env python3
"""Time the compiled rational backend (gmpy2) against the pure-Python
fractions fallback on the workbench's heaviest exact workloads.

Run directly; it re-executes itself under MOYALBENCH_RATIONAL=gmpy2 and
=fraction and prints a comparison table.  Use --inner to run one backend in
the current process (that is what the subprocesses do).
"""

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads():
    from random import Random

    from moyalbench.backend import Q
    from moyalbench.laguerre import laguerre, mixed_orthogonality
    from moyalbench.observables import duality_gram
    from moyalbench.phase import check_associativity, random_phase_poly
    from moyalbench.spectral import partition_of_unity
    from moyalbench.uncertainty import default_lambda_grid, scan_lambda

    laguerre(40)  # warm the coefficient cache outside the timers

    def duality():
        duality_gram(12, Q(1, 3))

    def partition():
        partition_of_unity(Q(1, 4), Q(10), tol=1e-6, n_cap=400)

    def mixed():
        for m in range(14):
            for n in range(14):
                mixed_orthogonality(m, n, Q(1, 3))

    def scan():
        scan_lambda(default_lambda_grid(64), 1000)

    def algebra():
        rng = Random(0)
        for _ in range(12):
            f, g, h = (random_phase_poly(rng) for _ in range(3))
            check_associativity(f, g, h, Q(1, 4))

    return [
        ("duality-gram-12", duality),
        ("partition-unity-N400", partition),
        ("mixed-orthogonality-14", mixed),
        ("selection-scan-64/1000", scan),
        ("star-associativity-12", algebra),
    ]


def run_inner(repeat: int) -> dict:
    from moyalbench.backend import BACKEND

    results = {}
    for name, fn in _workloads():
        fn()  # warm-up
        best = min(_timed(fn) for _ in range(repeat))
        results[name] = best
    return {"backend": BACKEND, "timings": results}


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--inner", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if args.inner:
        print(json.dumps(run_inner(args.repeat)))
        return 0

    reports = {}
    for backend in ("gmpy2", "fraction"):
        env = dict(os.environ, MOYALBENCH_RATIONAL=backend)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--inner",
             "--repeat", str(args.repeat)],
            capture_output=True, text=True, env=env,
        )
        if proc.returncode != 0:
            print(f"{backend}: unavailable ({proc.stderr.strip().splitlines()[-1]})")
            continue
        reports[backend] = json.loads(proc.stdout)

    if not reports:
        return 1
    names = list(next(iter(reports.values()))["timings"])
    width = max(len(n) for n in names)
    header = f"{'workload'.ljust(width)}  " + "".join(
        f"{b:>12}" for b in reports
    )
    print(header)
    print("-" * len(header))
    for name in names:
        row = name.ljust(width) + "  "
        for rep in reports.values():
            row += f"{rep['timings'][name] * 1000:>10.1f}ms"
        if len(reports) == 2:
            g, f = (rep["timings"][name] for rep in reports.values())
            row += f"   x{f / g:.1f}"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
