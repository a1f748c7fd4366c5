"""Mean NMI/ARI/F-score of FPA, NCA and the k-core baselines on planted partitions."""
import argparse
import time

import numpy as np

from dmcs import fpa, highest_core_search, kcore_search, nca, planted_partition
from dmcs.errors import NoKCoreCommunityError
from dmcs.metrics import best_against_overlapping
from dmcs.synth import p_in_for_mixing


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=500)
    ap.add_argument("--groups", type=int, default=10)
    ap.add_argument("--p-out", type=float, default=0.02)
    ap.add_argument("--mu", type=float, nargs="+", default=[0.1, 0.2, 0.3, 0.4])
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--queries", type=int, default=20)
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--with-nca", action="store_true", help="also run NCA (quadratic, slow for large n)")
    args = ap.parse_args()

    algos = {
        "fpa": lambda g, q: fpa(g, [q]),
        f"kcore(k={args.k})": lambda g, q: kcore_search(g, [q], args.k),
        "highcore": lambda g, q: highest_core_search(g, [q]),
    }
    if args.with_nca:
        algos["nca"] = lambda g, q: nca(g, [q])

    print(f"{'mu':>5} {'algorithm':<12} {'nmi':>7} {'ari':>7} {'f1':>7} {'fail':>5} {'sec':>7}")
    for mu in args.mu:
        p_in = p_in_for_mixing(args.n, args.groups, args.p_out, mu)
        scores = {a: [] for a in algos}
        fails = dict.fromkeys(algos, 0)
        secs = dict.fromkeys(algos, 0.0)
        for seed in range(args.seeds):
            g, truth = planted_partition(args.n, args.groups, p_in, args.p_out, seed=seed)
            block = {v: i for i, t in enumerate(truth) for v in t}
            queries = np.random.default_rng(1000 + seed).choice(args.n, args.queries, replace=False)
            for name, run in algos.items():
                for q in queries.tolist():
                    t0 = time.perf_counter()
                    try:
                        pred = run(g, q).community
                    except NoKCoreCommunityError:
                        fails[name] += 1
                        scores[name].append((0.0, 0.0, 0.0))
                        continue
                    finally:
                        secs[name] += time.perf_counter() - t0
                    rep = best_against_overlapping(pred, [truth[block[q]]], g.n, [q])
                    scores[name].append((rep.nmi, rep.ari, rep.fscore))
        for name in algos:
            nmi, ari, f1 = np.mean(scores[name], axis=0)
            print(f"{mu:5.2f} {name:<12} {nmi:7.3f} {ari:7.3f} {f1:7.3f} {fails[name]:5d} {secs[name]:7.2f}")


if __name__ == "__main__":
    main()
