"""Time each hot kernel under the numpy and numba backends.

    python benchmarks/bench_kernels.py [--repeat N] [--quick]

numba timings exclude the first (compiling) call.
"""

import argparse
import time

import numpy as np

from twinpoly import census, kernels
from twinpoly.field import field_of_order, make_field


def cases(quick):
    q3 = 16 if quick else 64
    F = field_of_order(q3)
    t = F.tables()
    yield f"rootless_mask q={q3} d=3", lambda: kernels.rootless_mask(q3, 3, t["add"], t["mul"])

    Fs = make_field(3)
    ts = Fs.tables()
    d = 7 if quick else 9

    def sieve():
        out = np.ones(3 ** d, dtype=np.bool_)
        for k in range(1, d // 2 + 1):
            factors = np.flatnonzero(census.irreducible_bitmap(Fs, k))
            kernels.mark_products(out, 3, d, k, factors, ts["add"], ts["mul"])
        return out
    yield f"sieve q=3 d={d}", sieve

    bm = census.irreducible_bitmap(F, 3)
    yield f"scalar_shift_counts q={q3} d=3", lambda: kernels.scalar_shift_counts(bm, q3, t["add"])

    p = 2011 if quick else 19993
    Fp = make_field(p)
    yield f"affine_curve_count p={p}", lambda: kernels.affine_curve_count(2, p, 1, Fp._mod_arr)

    Fb = make_field(7, 6) if quick else make_field(13, 6)
    yield f"poly_roots x^3 - 5 in F_{Fb.p}^6", lambda: kernels.poly_roots((1, 0, 0, Fb._neg(5)), Fb.p, Fb.e, Fb._mod_arr)

    a = np.arange(Fb.q, dtype=np.int64)
    yield f"field_mul F_{Fb.p}^6 (all elements)", lambda: kernels.field_mul(a, a[::-1], Fb.p, Fb.e, Fb._mod_arr)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller sizes")
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"{'kernel':<40}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for name, fn in cases(args.quick):
        row = {}
        results = []
        for b in backends:
            with kernels.use_backend(b):
                results.append(fn())  # warm-up, compiles under numba
                row[b] = best_of(fn, args.repeat)
        if len(results) == 2:
            x, y = results
            assert np.array_equal(np.asarray(x), np.asarray(y)), f"backends disagree on {name}"
        line = f"{name:<40}" + "".join(f"{row[b] * 1e3:>10.1f}ms" for b in backends)
        if len(backends) == 2:
            line += f"{row['numpy'] / row['numba']:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
