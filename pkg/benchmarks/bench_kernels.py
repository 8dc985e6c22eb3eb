"""Compiled vs pure-Python kernels on seeded instances.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Prints the median time per call for each kernel and backend, and the speedup.
"""

import argparse
import statistics
import time

from twovcss import _pykernels as py
from twovcss.generators import generate

try:
    from twovcss import _ckernels as c
except ImportError:  # extension not built
    c = None


def median_time(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def cases():
    big = generate("random-2vc", 400, 1)
    cubic = generate("cubic", 400, 1)
    small = [generate("random-2vc", 8, s) for s in range(20)]
    adj = lambda g: [list(a) for a in g.adj]  # noqa: E731
    yield "articulation_points n=400", lambda k: k.articulation_points(big.n, adj(big))
    yield "two_vertex_cuts cubic n=400", lambda k: k.two_vertex_cuts(cubic.n, adj(cubic))
    yield "max_matching n=400", lambda k: k.max_matching(big.n, adj(big))
    yield "exact_2vcss 20 x n=8", lambda k: [k.exact_2vcss(g.n, g.sorted_edges()) for g in small]
    yield "exact_min_2edge_cover 20 x n=8", lambda k: [k.exact_min_2edge_cover(g.n, g.sorted_edges()) for g in small]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"{'kernel':34} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, run in cases():
        tp = median_time(lambda: run(py), args.repeat)
        if c is None:
            print(f"{name:34} {tp:10.4f} {'-':>10} {'-':>8}")
            continue
        tc = median_time(lambda: run(c), args.repeat)
        print(f"{name:34} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
