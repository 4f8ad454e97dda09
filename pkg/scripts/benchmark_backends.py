"""Compare the compiled quad-precision kernel against the pure-Python
multiprecision fallback: agreement and throughput on the hot path.

Run:  python3 scripts/benchmark_backends.py
"""

import math
import time

from resum import _kernel_py
from resum.benchmarks import get_problem

try:
    from resum import _kernel
except ImportError:
    _kernel = None

# (problem id, kind code, control parameter) hot-path samples
CASES = [
    ("anomalous-dimension", 3, -1.2),
    ("trap-3d", 0, 0.3),
    ("polymer-3d", 3, -1.0),
    ("gaussian-polymer", 1, 0.2),
    ("gaussian-polymer", 0, 8.0),
]

REPEAT = 200


def bench(kernel, label):
    total = 0.0
    results = []
    for case in CASES:
        pid, code, u = case
        p = get_problem(pid)
        a = list(p.series.coeffs)
        beta = p.target.beta
        k = p.usable_order
        orders = [k - 1, k]
        t0 = time.perf_counter()
        for _ in range(REPEAT):
            out = kernel.transform_marginal(a, beta, code, u, orders)
        dt = (time.perf_counter() - t0) / REPEAT
        total += dt
        results.append((case, out, dt))
    print("%s backend:" % label)
    for (pid, code, u), out, dt in results:
        print("  %-20s kind=%d u=%-5g %10.1f us/call  C=[%s]"
              % (pid, code, u, dt * 1e6,
                 ", ".join("%.12g" % v for v in out)))
    print("  total %.1f us/call\n" % (total * 1e6))
    return {case: out for case, out, _ in results}


def main():
    py = bench(_kernel_py, "python (mpfr)")
    if _kernel is None:
        print("compiled kernel not built; skipping comparison")
        return
    cc = bench(_kernel, "compiled (quad)")
    worst = 0.0
    for case in py:
        for a, b in zip(py[case], cc[case]):
            if math.isfinite(a) and math.isfinite(b):
                worst = max(worst, abs(a - b) / max(1.0, abs(a)))
    print("worst relative disagreement: %.3g" % worst)


if __name__ == "__main__":
    main()
