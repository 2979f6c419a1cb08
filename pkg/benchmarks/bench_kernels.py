"""Compare the compiled and pure-Python kernels on the workloads that matter.

    python benchmarks/bench_kernels.py [--repeat 3]

Each workload runs on both backends and the results are checked equal
before timings are reported.
"""

from __future__ import annotations

import argparse
import random
import time

from linkirr import _pykernels

try:
    from linkirr import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _random_rows(rng, n, p):
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


def _circulant(n, steps):
    return [sum(1 << ((i + s) % n) | 1 << ((i - s) % n) for s in steps) for i in range(n)]


def workloads():
    rng = random.Random(0)
    rand = [(n, _random_rows(rng, n, 0.5)) for n in (10, 16, 24, 32) for _ in range(50)]
    sym = [(n, _circulant(n, s)) for n, s in [(12, (1, 2)), (20, (1, 3)), (30, (1, 4, 9)), (40, (1, 2))]]
    parents6 = [(6, c) for c in _sorted_catalog(6)]

    def canon_random(k):
        return [k.canon(n, r) for n, r in rand]

    def canon_symmetric(k):
        return [k.canon(n, r) for n, r in sym]

    def extend_n7(k):
        return [k.extend_children(n, k.rows_from_code(n, c), c) for n, c in parents6]

    def regular_9_4(k):
        seen, frontier, out = {0}, [0], 0
        while frontier:
            nxt = []
            for code in frontier:
                rows = k.rows_from_code(9, code)
                if all(bin(x).count("1") == 4 for x in rows):
                    out += 1
                    continue
                for ch in k.regular_children(9, 4, rows):
                    if ch not in seen:
                        seen.add(ch)
                        nxt.append(ch)
            frontier = nxt
        return out

    def labeled_6(k):
        return k.count_labeled_classes(6)

    return [
        ("canon, 200 random graphs n=10..32", canon_random),
        ("canon, symmetric circulants", canon_symmetric),
        ("extend_children, order-6 catalog", extend_n7),
        ("regular generation (9, 4)", regular_9_4),
        ("labeled classes n=6 (32768 graphs)", labeled_6),
    ]


def _sorted_catalog(n):
    codes = {0}
    for m in range(1, n):
        codes = sorted(c for p in codes for c in _pykernels.extend_children(m, _pykernels.rows_from_code(m, p), p))
    return codes


def best_of(fn, k, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(k)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'workload':<40} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, fn in workloads():
        tp, rp = best_of(fn, _pykernels, args.repeat)
        tc, rc = best_of(fn, _ckernels, args.repeat)
        if rp != rc:
            raise SystemExit(f"backends disagree on {name!r}")
        print(f"{name:<40} {tp:>10.4f} {tc:>11.4f} {tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
