"""Comparison searches (fixed-k core, highest core) and the exhaustive oracle."""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Iterator

from .errors import EmptyGraphError, NoKCoreCommunityError, OracleSizeError
from .graph import Graph, _reach, as_nodeset, connected_component_containing
from .modularity import _cm, _dm
from .search import SearchResult


@dataclass(frozen=True)
class CoreDecomposition:
    coreness: dict[int, int]
    order: tuple[int, ...]


def core_decomposition(g: Graph, nodes: Iterable[int] | None = None) -> CoreDecomposition:
    """Bucket-based core numbers (Batagelj-Zaversnik) of ``G[nodes]``."""
    nodes = as_nodeset(range(g.n) if nodes is None else nodes)
    member = bytearray(g.n)
    for v in nodes:
        member[v] = 1
    deg = {v: sum(member[w] for w in g.adj[v]) for v in nodes}
    maxd = max(deg.values(), default=0)
    buckets: list[list[int]] = [[] for _ in range(maxd + 1)]
    for v in reversed(nodes):
        buckets[deg[v]].append(v)
    core: dict[int, int] = {}
    order = []
    cur = 0
    while len(core) < len(nodes):
        cur = min(cur, maxd)
        while not buckets[cur]:
            cur += 1
        v = buckets[cur].pop()
        if v in core or deg[v] != cur:
            continue
        core[v] = cur
        order.append(v)
        for w in g.adj[v]:
            if member[w] and w not in core and deg[w] > cur:
                deg[w] -= 1
                buckets[deg[w]].append(w)
                if deg[w] < cur:
                    cur = deg[w]
    return CoreDecomposition(core, tuple(order))


def _kcore_nodes(g: Graph, comp: tuple[int, ...], k: int) -> set[int]:
    alive = set(comp)
    deg = {v: g.deg[v] for v in comp}
    stack = [v for v in comp if deg[v] < k]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] < k:
                    stack.append(w)
    return alive


def kcore_search(g: Graph, q: Iterable[int], k: int) -> SearchResult:
    """Connected k-core containing every query node.

    Peels nodes of degree below ``k`` and returns the surviving component of
    the queries. Raises ``NoKCoreCommunityError`` if a query node is peeled or
    the queries end up in different surviving components.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    q = as_nodeset(q)
    comp = connected_component_containing(g, q)
    if g.m == 0:
        raise EmptyGraphError("density modularity undefined on a graph without edges")
    alive = _kcore_nodes(g, comp, k)
    if any(v not in alive for v in q):
        raise NoKCoreCommunityError(f"query node peeled: no connected {k}-core contains the queries")
    member = bytearray(g.n)
    for v in alive:
        member[v] = 1
    community = tuple(_reach(g, q[0], member))
    inside = set(community)
    if any(v not in inside for v in q):
        raise NoKCoreCommunityError(f"queries fall into different {k}-core components")
    return _core_result(g, community, q, "kcore", k, len(comp))


def _core_result(g, community, q, algorithm, k, start_size) -> SearchResult:
    member = set(community)
    l2 = sum(1 for v in community for w in g.adj[v] if w in member)
    d = sum(g.deg[v] for v in community)
    return SearchResult(
        community=community, dm=_dm(l2 // 2, d, len(community), g.m), cm=_cm(l2 // 2, d, g.m),
        algorithm=algorithm, query=q, removals=start_size - len(community), k=k,
    )


def highest_core_search(g: Graph, q: Iterable[int]) -> SearchResult:
    """Connected core of the largest order that contains every query node."""
    q = as_nodeset(q)
    comp = connected_component_containing(g, q)
    cores = core_decomposition(g, comp).coreness
    for k in range(min(cores[v] for v in q), 0, -1):
        try:
            res = kcore_search(g, q, k)
        except NoKCoreCommunityError:
            continue
        return replace(res, algorithm="highcore")
    return _core_result(g, comp, q, "highcore", 0, len(comp))


def connected_supersets(adj_mask: list[int], root: int) -> Iterator[int]:
    """Every connected vertex set containing ``root``, each exactly once, as bitmasks.

    Classic include/exclude expansion: a branch adds one frontier node, and
    that node is then forbidden in the sibling branches that follow it.
    """
    stack = [(1 << root, adj_mask[root], 0)]
    while stack:
        s, ext, excl = stack.pop()
        yield s
        while ext:
            bit = ext & -ext
            ext ^= bit
            v = bit.bit_length() - 1
            ns = s | bit
            stack.append((ns, (ext | adj_mask[v]) & ~ns & ~excl, excl))
            excl |= bit


def exact_dmcs(g: Graph, q: Iterable[int], node_limit: int = 16) -> SearchResult:
    """Exhaustive DMCS over all connected supersets of the queries.

    Ties are broken by smaller size, then the lexicographically smaller
    sorted node tuple. Scores are compared exactly as rationals.
    """
    q = as_nodeset(q)
    comp = connected_component_containing(g, q)
    if len(comp) > node_limit:
        raise OracleSizeError(len(comp), node_limit)
    local = {v: i for i, v in enumerate(comp)}
    adj_mask = [0] * len(comp)
    for v, i in local.items():
        for w in g.adj[v]:
            adj_mask[i] |= 1 << local[w]
    qmask = 0
    for v in q:
        qmask |= 1 << local[v]
    deg = [g.deg[v] for v in comp]
    m = g.m
    if m == 0:
        raise EmptyGraphError("density modularity undefined on a graph without edges")

    def nodes_of(mask):
        return tuple(comp[i] for i in range(len(comp)) if mask >> i & 1)

    # same expansion as connected_supersets, carrying (2*l, d, size) along
    r = local[q[0]]
    stack = [(1 << r, adj_mask[r], 0, 0, deg[r], 1)]
    best = None
    while stack:
        s, ext, excl, l2, d, size = stack.pop()
        if s & qmask == qmask:
            # DM = (2 m l2 - d^2) / (4 m size), compared by cross-multiplication
            num = 2 * m * l2 - d * d
            if best is None:
                best = (num, size, s)
            else:
                bnum, bsize, bs = best
                lhs, rhs = num * bsize, bnum * size
                if lhs > rhs or (lhs == rhs and (size < bsize or (
                        size == bsize and nodes_of(s) < nodes_of(bs)))):
                    best = (num, size, s)
        while ext:
            bit = ext & -ext
            ext ^= bit
            v = bit.bit_length() - 1
            ns = s | bit
            stack.append((ns, (ext | adj_mask[v]) & ~ns & ~excl, excl,
                          l2 + 2 * bin(adj_mask[v] & s).count("1"), d + deg[v], size + 1))
            excl |= bit
    return _core_result(g, nodes_of(best[2]), q, "exact", None, len(comp))
