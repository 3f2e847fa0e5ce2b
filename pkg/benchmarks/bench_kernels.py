"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time
from itertools import combinations

from sigcayley import kernels
from sigcayley.cayley import build_sigraph, validate_spec
from sigcayley.sigraph import NEG, POS, Sigraph


def complete_signed(n, seed):
    rng = random.Random(seed)
    return Sigraph(
        n, tuple((a, b, rng.choice([POS, NEG])) for a, b in combinations(range(n), 2))
    )


def cases():
    yield "cycles K9 (signed)", "negative_histogram", complete_signed(9, 1)
    yield "cycles Sigma(3,3)", "negative_histogram", build_sigraph(validate_spec(3, 3))
    yield "cycles list K8 (signed)", "simple_cycles", complete_signed(8, 2)
    yield "marking Sigma(2,8), 16 v", "first_valid_marking", build_sigraph(validate_spec(2, 8))
    # an incompatible graph forces the full 2^16 scan
    g = complete_signed(16, 3)
    yield "marking K16 (no solution)", "first_valid_marking", g


def call(backend, name, g):
    fn = getattr(backend, name)
    if name == "first_valid_marking":
        ea = [a for a, _, _ in g.edges]
        eb = [b for _, b, _ in g.edges]
        es = [1 if s is NEG else 0 for _, _, s in g.edges]
        return fn(g.vertex_count, ea, eb, es)
    indptr, indices, neg = g.csr()
    if name == "simple_cycles":
        return fn(indptr, indices)
    return list(fn(indptr, indices, neg))


def best_of(repeat, backend, name, g):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = call(backend, name, g)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = sorted(kernels.BACKENDS)
    print(f"{'case':<28}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}")
    for label, name, g in cases():
        times = {}
        results = {}
        for b in names:
            times[b], results[b] = best_of(args.repeat, kernels.BACKENDS[b], name, g)
        assert len({repr(r) for r in results.values()}) == 1, f"backends disagree on {label}"
        row = f"{label:<28}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in names)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
