"""Command-line interface: ``dmcs {search,gen,eval,stats}``.

Results are JSON documents with sorted keys; node ids are the external ids
of the input files. Exit codes: 0 success, 2 input error, 3 no community
under the given constraints, 4 exact search refused for size.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import Optional

from . import errors
from .baselines import exact_dmcs, highest_core_search, kcore_search
from .graph import Graph, bfs_distances, connected_components, load_edge_list, write_edge_list
from .metrics import best_against_overlapping
from .search import fpa, nca
from .synth import planted_partition, read_communities, ring_of_cliques, write_communities

SCHEMA_VERSION = 1
ORACLE_LIMIT_ENV = "DMCS_ORACLE_LIMIT"

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE, EXIT_REFUSED = 0, 2, 3, 4
_EXIT_BY_ERROR = {
    errors.NoKCoreCommunityError: EXIT_INFEASIBLE,
    errors.QueriesDisconnectedError: EXIT_INFEASIBLE,
    errors.NotApplicableError: EXIT_INFEASIBLE,
    errors.OracleSizeError: EXIT_REFUSED,
}


class UsageError(errors.DMCSError):
    code = "usage"


@dataclass
class RunRecord:
    graph: str
    algorithm: str
    query: list
    flags: dict
    community: list
    dm: float
    cm: float
    size: int
    n: int
    best_iteration: int
    removals: int
    wall_time: float
    k: Optional[int] = None
    schema_version: int = SCHEMA_VERSION

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        return cls(**json.loads(text))


def _read_graph(path: str, weighted: bool = False) -> Graph:
    with open(path, encoding="utf-8") as f:
        return load_edge_list(f, weighted=weighted)


def _parse_ids(values) -> list[int]:
    out = []
    for v in values:
        for part in str(v).split(","):
            if part.strip():
                try:
                    out.append(int(part))
                except ValueError:
                    raise UsageError(f"query ids must be integers, got {part!r}") from None
    return out


def _oracle_limit(requested: int) -> int:
    cap = os.environ.get(ORACLE_LIMIT_ENV)
    return min(requested, int(cap)) if cap else requested


def cmd_search(args) -> dict:
    g = _read_graph(args.graph, args.weighted)
    external = _parse_ids(args.query)
    if not external:
        raise UsageError("at least one query id is required")
    q = g.internal_ids(external)
    t0 = time.perf_counter()
    if args.algo == "fpa":
        res = fpa(g, q, pruning=not args.no_pruning)
    elif args.algo == "nca":
        res = nca(g, q)
    elif args.algo == "kcore":
        if args.k is None:
            raise UsageError("--k is required for --algo kcore")
        res = kcore_search(g, q, args.k)
    elif args.algo == "highcore":
        res = highest_core_search(g, q)
    else:
        res = exact_dmcs(g, q, node_limit=_oracle_limit(args.node_limit))
    elapsed = time.perf_counter() - t0
    flags = {"pruning": not args.no_pruning, "k": args.k, "weighted": args.weighted}
    if args.algo == "exact":
        flags["node_limit"] = _oracle_limit(args.node_limit)
    rec = RunRecord(
        graph=args.graph, algorithm=args.algo, query=sorted(set(external)), flags=flags,
        community=g.external_ids(res.community), dm=res.dm, cm=res.cm, size=res.size,
        n=g.n, best_iteration=res.best_iteration, removals=res.removals,
        wall_time=elapsed, k=res.k,
    )
    text = rec.to_json()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text + "\n")
    return asdict(rec)


def cmd_gen(args) -> dict:
    p = args.params
    try:
        if args.kind == "ring":
            if len(p) != 2:
                raise UsageError("gen ring takes: NUM_CLIQUES CLIQUE_SIZE")
            g, truth = ring_of_cliques(int(p[0]), int(p[1]))
        else:
            if len(p) != 4:
                raise UsageError("gen sbm takes: N COMMUNITIES P_IN P_OUT")
            g, truth = planted_partition(int(p[0]), int(p[1]), float(p[2]), float(p[3]), seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    prefix = args.out or args.kind
    with open(prefix + ".el", "w", encoding="utf-8") as f:
        write_edge_list(g, f)
    with open(prefix + ".cmty", "w", encoding="utf-8") as f:
        write_communities(truth, f)
    return {"kind": args.kind, "params": p, "seed": args.seed, "n": g.n, "m": g.m,
            "communities": len(truth), "files": [prefix + ".el", prefix + ".cmty"]}


def cmd_eval(args) -> dict:
    with open(args.result, encoding="utf-8") as f:
        rec = RunRecord.from_json(f.read())
    with open(args.truth, encoding="utf-8") as f:
        truths = read_communities(f)
    n = args.n if args.n is not None else rec.n
    # ids are external; index them densely over everything mentioned
    seen = sorted(set(rec.community).union(*truths, rec.query))
    if len(seen) > n:
        raise UsageError(f"{len(seen)} distinct node ids exceed n={n}")
    index = {v: i for i, v in enumerate(seen)}
    rep = best_against_overlapping(
        [index[v] for v in rec.community],
        [[index[v] for v in t] for t in truths],
        n, [index[v] for v in rec.query],
    )
    return {**asdict(rep), "n": n, "schema_version": SCHEMA_VERSION}


def _double_sweep(g: Graph, comp) -> int:
    d1 = bfs_distances(g, [comp[0]])
    far = d1.layers[-1][0]
    return bfs_distances(g, [far]).D


def cmd_stats(args) -> dict:
    g = _read_graph(args.graph)
    out = {"n": g.n, "m": g.m, "schema_version": SCHEMA_VERSION, "warnings": []}
    if g.n == 0:
        out["warnings"].append("graph has no edges")
        print("warning: graph has no edges", file=sys.stderr)
    comps = connected_components(g)
    out["components"] = len(comps)
    out["largest_component"] = max((len(c) for c in comps), default=0)
    hist = Counter(g.deg)
    out["degree_histogram"] = {str(k): hist[k] for k in sorted(hist)}
    if comps:
        largest = max(comps, key=len)
        out["diameter_estimate"] = _double_sweep(g, largest)
        out["diameter_method"] = "double-sweep BFS lower bound on the largest component"
    else:
        out["diameter_estimate"] = 0
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dmcs", description="Density-modularity community search")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("search", help="find a community for the query nodes")
    s.add_argument("graph")
    s.add_argument("--query", "-q", nargs="+", required=True, help="external node ids")
    s.add_argument("--algo", choices=["fpa", "nca", "kcore", "highcore", "exact"], default="fpa")
    s.add_argument("--k", type=int)
    s.add_argument("--no-pruning", action="store_true", help="disable layer pruning in fpa")
    s.add_argument("--node-limit", type=int, default=16, help="component size cap for exact")
    s.add_argument("--weighted", action="store_true", help="read a weight column")
    s.add_argument("--out", "-o")
    s.set_defaults(func=cmd_search)

    gp = sub.add_parser("gen", help="write a synthetic graph and its communities")
    gp.add_argument("kind", choices=["ring", "sbm"])
    gp.add_argument("params", nargs="+")
    gp.add_argument("--seed", type=int, default=0)
    gp.add_argument("--out", "-o", help="output prefix (default: kind)")
    gp.set_defaults(func=cmd_gen)

    e = sub.add_parser("eval", help="score a search result against ground truth")
    e.add_argument("result")
    e.add_argument("truth")
    e.add_argument("--n", type=int, help="node count (default: from the result)")
    e.set_defaults(func=cmd_eval)

    st = sub.add_parser("stats", help="summary statistics of an edge list")
    st.add_argument("graph")
    st.set_defaults(func=cmd_stats)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except (errors.DMCSError, OSError, ValueError) as exc:
        code = getattr(exc, "code", "input-error")
        status = next((v for k, v in _EXIT_BY_ERROR.items() if isinstance(exc, k)), EXIT_INPUT)
        print(json.dumps({"error": {"code": code, "message": str(exc)}}, sort_keys=True), file=sys.stderr)
        return status
    print(json.dumps(out, sort_keys=True, indent=2))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
