#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Both backends compute identical integers; this script times them on the
workloads that dominate the test and reproduction suites:

  phi2_closed    two-branch closed form (sort + weighted prefix dot)
  dw_full        exhaustive E-enumeration per norm evaluation
  dw_signature   sign-class signature scan (large supports)
  phi2_brute     injection enumeration (the oracle gate)
  dw_brute       window-subset enumeration with the injection oracle inside

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from greedybench import _kernel_py

try:
    from greedybench import _kernel
except ImportError:
    _kernel = None


def make_instances(rng, count, size, magnitude=720):
    out = []
    for _ in range(count):
        vals = []
        while len(vals) < size:
            v = rng.randint(-magnitude, magnitude)
            if v:
                vals.append(v)
        out.append(vals)
    return out


def bench(label, backend_fns, workloads, repeat):
    results = {}
    for name, fn in backend_fns.items():
        if fn is None:
            continue
        best = None
        value = None
        for _ in range(repeat):
            t0 = time.perf_counter()
            value = [fn(*args) for args in workloads]
            dt = time.perf_counter() - t0
            best = dt if best is None or dt < best else best
        results[name] = (best, value)
    if "compiled" in results and "python" in results:
        assert results["compiled"][1] == results["python"][1], "backend mismatch in %s" % label
        speedup = results["python"][0] / results["compiled"][0]
    else:
        speedup = float("nan")
    line = "%-14s" % label
    for name in ("python", "compiled"):
        if name in results:
            line += "  %s %8.4fs" % (name, results[name][0])
    if speedup == speedup:
        line += "  speedup %6.1fx" % speedup
    print(line)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = random.Random(42)
    wpre, wtail = [720, 540], 240

    backends = lambda attr: {
        "python": getattr(_kernel_py, attr),
        "compiled": getattr(_kernel, attr) if _kernel else None,
    }

    if _kernel is None:
        print("compiled kernel unavailable; timing the pure backend only")

    work = [(vals, 2, wpre, wtail, wtail) for vals in make_instances(rng, 4000, 8)]
    bench("phi2_closed", backends("phi2_closed"), work, args.repeat)

    work = [(vals, wpre, wtail, wtail) for vals in make_instances(rng, 300, 12)]
    bench("dw_full", backends("dw_full"), work, args.repeat)

    work = [(vals, wpre, wtail, wtail) for vals in make_instances(rng, 2000, 32)]
    bench("dw_signature", backends("dw_signature"), work, args.repeat)

    work = [(vals, 1, wpre, wtail, 22) for vals in make_instances(rng, 30, 5)]
    bench("phi2_brute", backends("phi2_brute"), work, args.repeat)

    work = []
    for vals in make_instances(rng, 10, 5):
        idxs = sorted(rng.sample(range(1, 13), len(vals)))
        work.append((idxs, vals, 12, wpre, wtail, 0))
    bench("dw_brute", backends("dw_brute"), work, args.repeat)


if __name__ == "__main__":
    main()
