"""Time the compiled census kernel against the pure-Python one.

    python benchmarks/bench_census.py --q 5 7 8 9 --repeat 3
"""

import argparse
import time

from ellmoments import _census_py, kernel
from ellmoments.finitefield import field_of_order


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--q", type=int, nargs="+", default=[5, 7, 8, 9])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if kernel.BACKEND != "cython":
        raise SystemExit("compiled kernel not available; build with `pip install -e . --no-build-isolation`")
    from ellmoments import _census_c

    print(f"{'q':>4} {'tuples':>10} {'cython_s':>10} {'python_s':>10} {'speedup':>8}")
    for q in args.q:
        ctx = field_of_order(q)
        tb = ctx.tables
        call = (q, ctx.p, tb.add, tb.mul, tb.neg, tb.inv, 0, q)
        tc, rc = best_of(lambda: _census_c.tally(*call), args.repeat)
        tp, rp = best_of(lambda: _census_py.tally(*call), args.repeat)
        if rc != rp:
            raise SystemExit(f"kernels disagree at q={q}")
        print(f"{q:>4} {q**5:>10} {tc:>10.4f} {tp:>10.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
