"""Compare the compiled and pure-Python echelon kernels.

Times ``row_echelon`` on random integer matrices and on the end-to-end
eigenspace refinement of H(6,2), which is dominated by elimination.

Run: python3 benchmarks/bench_kernel.py
"""

import os
import random
import subprocess
import sys
import time

from cometric._kernel import _echelon_py

try:
    from cometric._kernel import _echelon_c
except ImportError:
    _echelon_c = None


def random_matrix(rng, rows, cols, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def bench_kernel(fn, mats, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        copies = [[list(r) for r in m] for m in mats]
        t0 = time.perf_counter()
        for m in copies:
            fn(m)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_end_to_end(pure):
    env = dict(os.environ)
    env["COMETRIC_PURE_PYTHON"] = "1" if pure else "0"
    code = (
        "import time; t0=time.perf_counter();"
        "from cometric.generators import SchemeSpec, generate;"
        "from cometric.scheme import validate_scheme;"
        "validate_scheme(generate(SchemeSpec('hamming', {'d':6,'q':2})));"
        "print(time.perf_counter()-t0)"
    )
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True
    )
    return float(out.stdout.strip())


def main():
    rng = random.Random(2024)
    print(f"{'case':34s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for rows, cols, count in [(40, 40, 20), (64, 64, 10), (64, 12, 50)]:
        mats = [random_matrix(rng, rows, cols) for _ in range(count)]
        tp = bench_kernel(_echelon_py.row_echelon, mats)
        label = f"row_echelon {rows}x{cols} x{count}"
        if _echelon_c is None:
            print(f"{label:34s} {tp:9.4f}s   (compiled kernel unavailable)")
            continue
        tc = bench_kernel(_echelon_c.row_echelon, mats)
        print(f"{label:34s} {tp:9.4f}s {tc:9.4f}s {tp / tc:7.2f}x")
    tp = bench_end_to_end(pure=True)
    tc = bench_end_to_end(pure=False)
    print(f"{'validate H(6,2) end to end':34s} {tp:9.4f}s {tc:9.4f}s {tp / tc:7.2f}x")


if __name__ == "__main__":
    main()
