"""Compare the compiled and pure-Python canonical labeling kernels.

Workload: every one-arc extension of every connected class with ``m - 1``
arcs, i.e. exactly the labeling calls made while enumerating level ``m``.

    python benchmarks/bench_canon.py --m 6 7
"""

import argparse
import time

from maxline import _canon_py
from maxline.enumeration import _children, _connected_certificates, _masks_from_certificate

try:
    from maxline import _canon
except ImportError:
    _canon = None


def workload(m):
    parents = [_masks_from_certificate(c) for c in _connected_certificates(m - 1)]
    return [child for masks in parents for child in _children(masks)]


def timed(fn, graphs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        certs = {fn(g)[0] for g in graphs}
        best = min(best, time.perf_counter() - start)
    return best, certs


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--m", type=int, nargs="+", default=[5, 6, 7])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    kernels = [("python", _canon_py.canonical_labeling)]
    if _canon is not None:
        kernels.append(("cython", _canon.canonical_labeling))
    else:
        print("compiled kernel not built; timing the fallback only")
    print(f"{'m':>3} {'calls':>8} {'classes':>8} " + " ".join(f"{k:>10}" for k, _ in kernels) + "   speedup")
    for m in args.m:
        graphs = workload(m)
        times, results = [], []
        for _, fn in kernels:
            seconds, certs = timed(fn, graphs, args.repeat)
            times.append(seconds)
            results.append(certs)
        assert all(r == results[0] for r in results), "kernels disagree"
        speedup = f"{times[0] / times[-1]:8.1f}x" if len(times) > 1 else ""
        cols = " ".join(f"{t:9.3f}s" for t in times)
        print(f"{m:>3} {len(graphs):>8} {len(results[0]):>8} {cols}   {speedup}")


if __name__ == "__main__":
    main()
