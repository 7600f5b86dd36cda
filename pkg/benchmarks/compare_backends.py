#!/usr/bin/env python3
"""Time the compiled elimination kernels against the pure-Python fallback.

Covers the three layers where the kernels sit: raw RREF, a full star
product, and end-to-end locating-pair decoding for each code family.
Run after `pip install -e . --no-build-isolation`; without the compiled
extension only the pure column is reported.
"""

import argparse
import random
import time

from pelp import backend
from pelp import bench
from pelp.gf import GF
from pelp.linalg import Matrix, rref


def timeit(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def rref_case(p, m, nrows, ncols, seed=1):
    f = GF(p, m)
    rng = random.Random(seed)
    rows = [[rng.randrange(f.order) for _ in range(ncols)] for _ in range(nrows)]
    def run():
        rref(Matrix(f, [r[:] for r in rows], ncols))
    return run


def star_case(q0=4, m1=12, m2=13):
    from pelp.codes import star_product
    from pelp.hermitian import one_point_code
    A = one_point_code(q0, m1).code
    B = one_point_code(q0, m2).code
    return lambda: star_product(A, B)


def decode_case(family):
    if family == "rs":
        cfg = bench.ExperimentConfig(
            family="rs", algo="pelp", params={"p": 2, "m": 6, "k": 10},
            t_values=[33], trials=10, seed=5, ell=2)
    elif family == "hermitian":
        cfg = bench.ExperimentConfig(
            family="hermitian", algo="pelp", params={"q0": 4, "degG": 12},
            t_values=[26], trials=10, seed=5, ell=2)
    else:
        cfg = bench.ExperimentConfig(
            family="cyclic", algo="pelp",
            params={"n": 51, "p": 5, "S": list(range(25)) + [30],
                    "R": list(range(14)) + [19]},
            t_values=[23], trials=5, seed=5, ell=2)
    return lambda: bench.run_experiment(cfg)


CASES = [
    ("rref 120x120 GF(13)", rref_case(13, 1, 120, 120), 3),
    ("rref 200x64  GF(2^6)", rref_case(2, 6, 200, 64), 3),
    ("rref 216x51  GF(5^16)", rref_case(5, 16, 216, 51), 2),
    ("star C12*C13 GF(16), n=64", star_case(), 3),
    ("pelp decode x10, RS GF(64) t=33", decode_case("rs"), 1),
    ("pelp decode x10, Hermitian q0=4 t=26", decode_case("hermitian"), 1),
    ("pelp decode x5,  cyclic n=51 GF(5^16) t=23", decode_case("cyclic"), 1),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--skip-cyclic", action="store_true",
                    help="skip the slowest (GF(5^16)) cases")
    args = ap.parse_args()

    modes = ["pure"]
    if backend.has_compiled():
        modes.append("compiled")
    else:
        print("note: compiled kernel not built, timing the fallback only")

    width = max(len(name) for name, _, _ in CASES)
    print(f"{'case':<{width}}  " + "  ".join(f"{m:>10}" for m in modes)
          + ("   speedup" if len(modes) == 2 else ""))
    for name, fn, repeat in CASES:
        if args.skip_cyclic and "5^16" in name:
            continue
        times = []
        for mode in modes:
            backend.set_backend(mode)
            times.append(timeit(fn, repeat))
        backend.set_backend("auto")
        row = f"{name:<{width}}  " + "  ".join(f"{t * 1000:>8.1f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"   {times[0] / times[1]:>6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
