"""Ring of cliques: classic vs density modularity of one clique and of a merged pair,
and what each search returns for a handful of queries."""
import argparse

from dmcs import fpa, free_rider_pair_check, nca, ring_of_cliques


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cliques", type=int, default=30)
    ap.add_argument("--size", type=int, default=6)
    args = ap.parse_args()

    g, truth = ring_of_cliques(args.cliques, args.size)
    r = free_rider_pair_check(g, truth[0], truth[1])
    print(f"n={g.n} m={g.m}")
    print(f"{'':>14}{'CM':>12}{'DM':>12}")
    print(f"{'one clique':>14}{r.cm_s:12.8f}{r.dm_s:12.6f}")
    print(f"{'two cliques':>14}{r.cm_union:12.8f}{r.dm_union:12.6f}")
    for q in (0, 1, args.size // 2):
        for name, res in (("fpa", fpa(g, [q])), ("fpa-nopruning", fpa(g, [q], pruning=False)), ("nca", nca(g, [q]))):
            print(f"q={q:<3} {name:<14} size={res.size:<4} dm={res.dm:.6f}")


if __name__ == "__main__":
    main()
