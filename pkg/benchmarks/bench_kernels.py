"""Time the numba and numpy kernel paths on representative workloads.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--torsion 12] [--degree 6]

Each workload is run once untimed (numba compilation, caches), then timed
``--repeat`` times; the best time is reported.  Outputs of the two paths are
checked for equality before timing.
"""
import argparse
import time

import numpy as np

from f4rigid import _kernels as K
from f4rigid.rootdata import f4_datum
from f4rigid.structconst import PermGroup
from f4rigid.torus import y_generators
from f4rigid.weyl import enumerate_weyl


def symmetric_group(n):
    return PermGroup(n, [[1, 0] + list(range(2, n)), list(range(1, n)) + [0]], name=f"S{n}")


def workloads(torsion, degree):
    f4 = f4_datum()
    w = enumerate_weyl(f4)
    gens = y_generators(f4)
    perms = K.NUMPY_KERNELS["torus_action"](gens, torsion)
    pos = np.array([i for i, p in enumerate(f4.roots) if p.is_positive], dtype=np.int64)
    neg = np.array([not p.is_positive for p in f4.roots], dtype=np.bool_)
    g = symmetric_group(degree)
    idx = np.arange(g.order, dtype=np.int64)
    return [
        (f"torus_action F4 n={torsion}", "torus_action", (gens, torsion)),
        (f"orbit_labels F4 n={torsion}", "orbit_labels", (perms,)),
        ("conjugation_table W(F4)", "conjugation_table",
         (w.perms, w.gen_perms, w.key_cols, w._sorted_keys, w._key_order, w.radix)),
        ("inversion_counts W(F4)", "inversion_counts", (w.perms, pos, neg)),
        (f"product_indices S{degree} x S{degree}", "product_indices",
         (g.elements, idx, idx, g._keys, g._key_order)),
    ]


def best_time(fn, args, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--torsion", type=int, default=12)
    ap.add_argument("--degree", type=int, default=6)
    args = ap.parse_args()
    if not K.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")

    print(f"{'workload':36s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for label, name, kargs in workloads(args.torsion, args.degree):
        np_fn, nb_fn = K.NUMPY_KERNELS[name], K.NUMBA_KERNELS[name]
        a, b = np_fn(*kargs), nb_fn(*kargs)  # warm-up and agreement check
        if not np.array_equal(a, b):
            raise SystemExit(f"{label}: kernel outputs differ")
        t_np = best_time(np_fn, kargs, args.repeat)
        t_nb = best_time(nb_fn, kargs, args.repeat)
        print(f"{label:36s} {1e3 * t_np:10.2f} {1e3 * t_nb:10.2f} {t_np / t_nb:8.1f}x")


if __name__ == "__main__":
    main()
