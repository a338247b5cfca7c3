"""Time the pairwise order scan on both backends.

    python benchmarks/bench_order.py [--sizes 21 41 81] [--repeat 5]

Inputs are rank-encoded null coordinates of a grid and its image under a
seeded causal automorphism, so both backends scan every pair (no early exit).
"""

import argparse
import time

from causal2d import order
from causal2d.gen import GenParams, gen_helement
from causal2d.minkowski import to_null
from causal2d.verify import GridSpec


def ranked(n, seed=0):
    a = gen_helement(GenParams(seed=seed))
    pts = GridSpec(-10, 10, n).events()
    src = [to_null(p) for p in pts]
    img = [to_null(a(p)) for p in pts]
    return [order.dense_ranks([getattr(c, k) for c in cs]) for cs in (src, img) for k in "uv"]


def best_of(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        k = fn(*args, False)
        best = min(best, time.perf_counter() - t0)
    assert k == -1
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[21, 41, 81])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    backends = {"python": order.python_first_mismatch}
    if order.compiled_first_mismatch is not None:
        backends["cython"] = order.compiled_first_mismatch
    else:
        print("compiled kernel not built; timing the python backend only")

    print(f"{'grid':>6} {'pairs':>12} " + " ".join(f"{b + ' [ms]':>14}" for b in backends))
    for n in args.sizes:
        data = ranked(n)
        times = [best_of(fn, data, args.repeat) for fn in backends.values()]
        pairs = (n * n) ** 2
        print(f"{n:>4}^2 {pairs:>12,} " + " ".join(f"{1e3 * t:>14.2f}" for t in times))


if __name__ == "__main__":
    main()
