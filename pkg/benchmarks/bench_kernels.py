#!/usr/bin/env python3
"""Benchmark the compiled distance-scan kernel against the pure fallback.

Times min_distance_batch on random words and coset_min_distances on a
real Reed-Solomon survey workload (the hot loop of the exhaustive
distance checks).  Run directly:

    python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import itertools
import random
import time

from ffsubsum import make_field, rscodes
from ffsubsum._kernels import pure

try:
    from ffsubsum._kernels import _distscan as compiled
except ImportError:
    compiled = None


def _time(fn, *args, repeat: int = 3):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def bench_batch(backends, quick: bool) -> None:
    rng = random.Random(2)
    n = 8
    n_words = 20_000 if quick else 200_000
    words = bytes(rng.randrange(8) for _ in range(n_words * n))
    table = bytes(rng.randrange(8) for _ in range(64 * n))
    print(f"min_distance_batch: {n_words} words x 64 table rows, n={n}")
    baseline = None
    for name, mod in backends:
        dt, out = _time(mod.min_distance_batch, words, table, n)
        rate = n_words / dt / 1e6
        line = f"  {name:8s} {dt * 1e3:9.1f} ms  ({rate:6.2f} M words/s)"
        if baseline is None:
            baseline = (dt, bytes(out))
        else:
            assert bytes(out) == baseline[1], "backends disagree"
            line += f"  speedup x{baseline[0] / dt:.1f}"
        print(line)


def bench_survey(backends, quick: bool) -> None:
    field = make_field(2, 3)
    k = 1 if not quick else 2
    code = rscodes.full_field_code(field, k)
    m = code.n - code.k
    print(f"distance survey: q=8, n={code.n}, k={code.k} ({8**m} cosets)")
    add = rscodes._add_table(field)
    basis = rscodes._scaled_basis(code, range(code.k, code.n))
    table = bytearray(8**code.k * code.n)
    for idx, msg in enumerate(itertools.product(field.elements(), repeat=code.k)):
        poly = rscodes.Poly.make(msg)
        for i, x in enumerate(code.eval_set):
            table[idx * code.n + i] = poly.evaluate(x).enc
    table = bytes(table)
    baseline = None
    for name, mod in backends:
        dt, out = _time(
            mod.coset_min_distances, 8, code.n, m, add, basis, table, repeat=1
        )
        rate = 8**m / dt / 1e6
        line = f"  {name:8s} {dt * 1e3:9.1f} ms  ({rate:6.2f} M cosets/s)"
        if baseline is None:
            baseline = (dt, bytes(out))
        else:
            assert bytes(out) == baseline[1], "backends disagree"
            line += f"  speedup x{baseline[0] / dt:.1f}"
        print(line)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()
    backends = [("pure", pure)]
    if compiled is not None:
        backends.append(("cython", compiled))
    else:
        print("compiled kernel not built; timing the pure backend only")
    bench_batch(backends, args.quick)
    bench_survey(backends, args.quick)


if __name__ == "__main__":
    main()
