#!/usr/bin/env python3
"""Benchmark: compiled arithmetic kernels versus the pure-Python fallback.

The package selects the compiled extension at import when available;
this script times both backends on the package's real hot paths and
prints a comparison table.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from salemnum import _kernels_py
from salemnum import kernels

try:
    from salemnum import _kernels as _compiled
except ImportError:
    _compiled = None


def _swap_backend(impl):
    for name in ("mul", "prem", "exact_div", "eval_at", "content", "scalar_div_exact"):
        setattr(kernels, name, getattr(impl, name))


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    rng = random.Random(12345)
    a64 = [rng.randint(-(2**63), 2**63) for _ in range(65)]
    b64 = [rng.randint(-(2**63), 2**63) for _ in range(65)]
    a256 = [rng.randint(-(2**63), 2**63) for _ in range(257)]
    b256 = [rng.randint(-(2**63), 2**63) for _ in range(257)]

    from salemnum.families import QUADRUPLES, quad_poly
    from salemnum.polycore import SturmChain, certify_salem, resultant, to_trace_form

    f80 = quad_poly(QUADRUPLES[-1])  # degree 80
    q40 = to_trace_form(f80)

    from salemnum.curvecheck import build_curve, transform_curves
    from salemnum.families import SEVEN_TUPLES

    c = build_curve(SEVEN_TUPLES[0])
    c2 = transform_curves(c)[1]
    av, bv = c.at_y(7), c2.at_y(7)

    return [
        ("poly mul, deg 64, 64-bit coeffs", lambda: kernels.mul(a64, b64)),
        ("poly mul, deg 256, 64-bit coeffs", lambda: kernels.mul(a256, b256)),
        ("Sturm chain, deg-40 trace form", lambda: SturmChain(q40)),
        ("resultant, curve node deg 54/108", lambda: resultant(av, bv)),
        ("certify_salem, deg-80 quadruple", lambda: certify_salem(f80)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _compiled is None:
        print("compiled kernels not built; showing pure-Python timings only")
    rows = []
    for label, fn in workloads():
        _swap_backend(_kernels_py)
        t_pure = bench(fn, args.repeat)
        if _compiled is not None:
            _swap_backend(_compiled)
            t_comp = bench(fn, args.repeat)
        else:
            t_comp = float("nan")
        rows.append((label, t_pure, t_comp))
    _swap_backend(_compiled if _compiled is not None else _kernels_py)

    width = max(len(r[0]) for r in rows)
    print(f"{'workload'.ljust(width)}  {'pure':>10}  {'compiled':>10}  {'speedup':>7}")
    for label, tp, tc in rows:
        ratio = tp / tc if tc == tc and tc > 0 else float("nan")
        print(f"{label.ljust(width)}  {tp * 1e3:9.2f}ms  {tc * 1e3:9.2f}ms  {ratio:6.2f}x")


if __name__ == "__main__":
    main()
