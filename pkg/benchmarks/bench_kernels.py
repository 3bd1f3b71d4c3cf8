"""Compare the numba and pure-numpy kernels.

    python benchmarks/bench_kernels.py [--pmax 2000] [--repeat 3]

The first numba call per kernel includes JIT compilation (or a cache load);
it is reported separately as "first call".
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from twistedtorus import pd_code_of_closure, torus_braid
from twistedtorus.kernels import get_backend


def _time(fn, repeat):
    t0 = time.perf_counter()
    first = fn()
    first_s = time.perf_counter() - t0
    best = first_s
    for _ in range(repeat - 1):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return first, first_s, best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pmax", type=int, default=2000)
    ap.add_argument("--case-pmax", type=int, default=400)
    ap.add_argument("--bracket", default="5,4", help="torus braid p,q for the state-sum benchmark")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = {}
    for name in ("numba", "numpy"):
        try:
            backends[name] = get_backend(name)
        except ImportError:
            print(f"{name}: unavailable")

    p, q = (int(x) for x in args.bracket.split(","))
    pd = np.asarray(pd_code_of_closure(torus_braid(p, q)).crossings, dtype=np.int64) - 1
    cases = [
        (f"scan closed form p<={args.pmax}", lambda m: m.scan_range(4, args.pmax, False, False, False, 10)),
        (f"scan +stats p<={args.pmax}", lambda m: m.scan_range(4, args.pmax, False, True, False, 10)),
        (f"scan +case search p<={args.case_pmax}", lambda m: m.scan_range(4, args.case_pmax, False, False, True, 10)),
        (f"scan +walk p<={args.case_pmax}", lambda m: m.scan_range(4, args.case_pmax, True, False, False, 10)),
        (f"state sum T({p},{q}), {len(pd)} crossings", lambda m: m.bracket_counts(pd)),
    ]

    print(f"{'kernel':42s} {'backend':8s} {'first call':>11s} {'best':>9s}")
    for label, fn in cases:
        outputs = {}
        for name, mod in backends.items():
            out, first_s, best = _time(lambda: fn(mod), args.repeat)
            outputs[name] = out
            print(f"{label:42s} {name:8s} {first_s:10.3f}s {best:8.3f}s")
        if len(outputs) == 2:
            a, b = outputs.values()
            same = all(np.array_equal(x, y) for x, y in zip(a, b)) if isinstance(a, tuple) else np.array_equal(a, b)
            print(f"{'':42s} outputs identical: {same}")


if __name__ == "__main__":
    main()
