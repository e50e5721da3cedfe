"""Compare the gmpy2 and Fraction rational backends on the hot paths.

Each backend is chosen at import time, so every measurement runs in a fresh
interpreter with ``BELLAPOSTOL_RATIONAL`` set.  Usage::

    python3 benchmarks/bench_backends.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "series_inverse_order_200": """
from bellapostol.backend import Q
from bellapostol.series import LaurentSeries
s = LaurentSeries.exponential(Q(1), 201) - 1
s.inverse()
""",
    "bell_apostol_table_n30": """
from bellapostol.backend import Q
from bellapostol.families import bell_apostol_table
bell_apostol_table(3, Q(-1, 2), 1, 1, 30)
""",
    "verify_3_6_and_4_1_small_grid": """
from bellapostol.backend import Q
from bellapostol.identities import Grid, run_suite
run_suite(["3.6", "4.1"], Grid(alphas=(0, 1, 2), lambdas=(Q(2), Q(-1, 2)), etas=(1,), deltas=(1,)), 10)
""",
}

RUNNER = """
import json, sys, time
src = sys.stdin.read()
t0 = time.perf_counter()
exec(compile(src, "<workload>", "exec"), {})
print(json.dumps(time.perf_counter() - t0))
"""


def measure(backend: str, code: str, repeat: int) -> float:
    env = dict(os.environ, BELLAPOSTOL_RATIONAL=backend)
    best = float("inf")
    for _ in range(repeat):
        proc = subprocess.run([sys.executable, "-c", RUNNER], input=code, capture_output=True,
                              text=True, env=env, check=True)
        best = min(best, json.loads(proc.stdout))
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    print(f"{'workload':<34}{'gmpy2 (s)':>12}{'fraction (s)':>15}{'speedup':>10}")
    for name, code in WORKLOADS.items():
        fast = measure("gmpy2", code, args.repeat)
        slow = measure("fraction", code, args.repeat)
        print(f"{name:<34}{fast:>12.3f}{slow:>15.3f}{slow / fast:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
