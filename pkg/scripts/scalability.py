"""Wall time of FPA (and optionally NCA) on planted partitions of growing size."""
import argparse
import time

import numpy as np

from dmcs import fpa, nca, planted_partition


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[5_000, 10_000, 20_000, 40_000])
    ap.add_argument("--block", type=int, default=50, help="nodes per planted community")
    ap.add_argument("--p-in", type=float, default=0.3)
    ap.add_argument("--out-degree", type=float, default=3.0, help="expected edges leaving a node")
    ap.add_argument("--queries", type=int, default=3)
    ap.add_argument("--nca-max", type=int, default=2_000, help="largest n to run NCA on")
    args = ap.parse_args()

    prev = None
    print(f"{'n':>7} {'m':>9} {'fpa s':>8} {'nopr s':>8} {'nca s':>8} {'growth':>7}")
    for n in args.sizes:
        g, _ = planted_partition(n, max(1, n // args.block), args.p_in, args.out_degree / n, seed=1)
        queries = np.random.default_rng(9).choice(n, args.queries, replace=False).tolist()

        def median_time(run):
            ts = []
            for q in queries:
                t0 = time.perf_counter()
                run(q)
                ts.append(time.perf_counter() - t0)
            return float(np.median(ts))

        t_fpa = median_time(lambda q: fpa(g, [q]))
        t_nopr = median_time(lambda q: fpa(g, [q], pruning=False))
        t_nca = median_time(lambda q: nca(g, [q])) if n <= args.nca_max else float("nan")
        growth = f"{t_fpa / prev:7.2f}" if prev else f"{'':>7}"
        print(f"{n:7d} {g.m:9d} {t_fpa:8.3f} {t_nopr:8.3f} {t_nca:8.3f} {growth}")
        prev = t_fpa


if __name__ == "__main__":
    main()
