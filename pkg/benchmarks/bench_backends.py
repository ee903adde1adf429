"""Compare the numba and numpy coset enumeration backends.

Each backend runs in its own interpreter because the choice is made at
import time.  Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
import numpy as np
from polarsearch import BACKEND, SearchConfig, kernel_search, verify_kernel
from polarsearch import _kernels
from polarsearch.fixtures import load_fixtures

repeat = int(sys.argv[1])
fixtures = load_fixtures()
verify_kernel(fixtures[0].kernel)  # compile outside the timed region

def best(fn):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)

rng = np.random.default_rng(7)
gens = np.array([int(x) for x in rng.integers(1, 1 << 62, size=20)], dtype=np.uint64)
v = np.uint64(12345)

res = {
    "backend": BACKEND,
    "verify all fixtures": best(lambda: [verify_kernel(f.kernel) for f in fixtures]),
    "coset scan 2^20 words": best(lambda: _kernels.coset_scan(gens, v, 62, 0)),
    "search l=8": best(lambda: kernel_search(SearchConfig((1, 2, 2, 4, 2, 4, 4, 8), max_kernels=None))),
}
print(json.dumps(res))
"""


def run(backend: str, repeat: int) -> dict:
    env = dict(os.environ, POLARSEARCH_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", WORKLOAD, str(repeat)],
        env=env, check=True, capture_output=True, text=True,
    )
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    results = [run(b, args.repeat) for b in ("numba", "numpy")]
    keys = [k for k in results[0] if k != "backend"]
    print(f"{'workload':<24}{'numba':>10}{'numpy':>10}{'ratio':>8}")
    for k in keys:
        a, b = results[0][k], results[1][k]
        print(f"{k:<24}{a:>9.3f}s{b:>9.3f}s{b / a:>8.1f}")


if __name__ == "__main__":
    main()
