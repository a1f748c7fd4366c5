"""Top-down greedy community search maximizing density modularity.

Both searches start from the query nodes' connected component and peel one
node at a time, remembering the best intermediate subgraph:

* :func:`nca` removes, among non-articulation non-query nodes, the one with
  the largest removal gain (recomputed for every candidate each round).
* :func:`fpa` removes nodes layer by layer, farthest from the queries first,
  choosing inside a layer by density ratio. Ratios only change for
  neighbors of the removed node, so a heap with lazy invalidation suffices.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .errors import EmptyGraphError, ProtectedNodeError, QueriesDisconnectedError
from .graph import (
    UNREACHABLE,
    DistanceIndex,
    Graph,
    _articulation,
    as_nodeset,
    bfs_distances,
    connected_component_containing,
)
from .modularity import _cm, _dm


class CommunityState:
    """Working node set with incrementally maintained counts.

    ``k[v]`` is the number of neighbors ``v`` has inside the set (valid for
    members only), ``l`` the internal edge count and ``d`` the sum of the
    members' degrees in the whole graph.
    """

    def __init__(self, g: Graph, nodes: Iterable[int], protected: Iterable[int] = ()):
        self.g = g
        self.member = bytearray(g.n)
        nodes = as_nodeset(nodes)
        for v in nodes:
            self.member[v] = 1
        self.protected = frozenset(as_nodeset(protected))
        if not self.protected <= set(nodes):
            raise ValueError("protected nodes must be members")
        self.k = [0] * g.n
        l2 = 0
        d = 0
        member = self.member
        for v in nodes:
            kv = sum(member[w] for w in g.adj[v])
            self.k[v] = kv
            l2 += kv
            d += g.deg[v]
        self.l = l2 // 2
        self.d = d
        self.size = len(nodes)

    def nodes(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.g.n) if self.member[v])

    def __contains__(self, v):
        return bool(self.member[v])

    def __len__(self):
        return self.size

    def dm(self) -> float:
        return _dm(self.l, self.d, self.size, self.g.m)

    def cm(self) -> float:
        return _cm(self.l, self.d, self.g.m)

    def remove(self, v: int) -> None:
        if not self.member[v]:
            raise KeyError(f"node {v} is not a member")
        if v in self.protected:
            raise ProtectedNodeError(f"node {v} is protected and cannot be removed")
        self.member[v] = 0
        self.l -= self.k[v]
        self.d -= self.g.deg[v]
        self.size -= 1
        k = self.k
        member = self.member
        for w in self.g.adj[v]:
            if member[w]:
                k[w] -= 1
        k[v] = 0


def remove_node(state: CommunityState, v: int) -> CommunityState:
    state.remove(v)
    return state


@dataclass(frozen=True)
class SearchResult:
    community: tuple[int, ...]
    dm: float
    cm: float
    algorithm: str
    query: tuple[int, ...]
    best_iteration: int = 0
    removals: int = 0
    # nodes removed in order; the community is the start set minus the first best_iteration
    order: tuple[int, ...] = field(default=(), repr=False)
    k: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.community)


def connect_queries(g: Graph, q: Iterable[int]) -> tuple[int, ...]:
    """Nodes on shortest paths from the lowest-id query node to every other query.

    Each node on a path steps to its lowest-id neighbor one hop closer to the
    pivot, so the result is deterministic.
    """
    q = as_nodeset(q)
    if not q:
        raise ValueError("query set is empty")
    pivot = q[0]
    dist = bfs_distances(g, [pivot]).dist
    keep = {pivot}
    for t in q[1:]:
        if dist[t] == UNREACHABLE:
            raise QueriesDisconnectedError(f"query nodes {pivot} and {t} lie in different components")
        v = t
        while v not in keep:
            keep.add(v)
            dv = dist[v]
            v = next(w for w in g.adj[v] if dist[w] == dv - 1)
    return as_nodeset(keep)


def _start(g, q):
    q = as_nodeset(q)
    start = connected_component_containing(g, q)
    if g.m == 0:
        raise EmptyGraphError("density modularity undefined on a graph without edges")
    return q, start


def _result(g, state_nodes, algorithm, q, best_iteration, order, k=None) -> SearchResult:
    """Build a result from the start set and the removal order."""
    gone = set(order[:best_iteration])
    community = tuple(v for v in state_nodes if v not in gone)
    st = CommunityState(g, community)
    return SearchResult(
        community=community, dm=st.dm(), cm=st.cm(), algorithm=algorithm, query=q,
        best_iteration=best_iteration, removals=len(order), order=tuple(order), k=k,
    )


def nca(g: Graph, q: Iterable[int],
        articulation: Optional[Callable[[CommunityState], set]] = None) -> SearchResult:
    """Non-articulation cancelling search.

    Every round recomputes the articulation nodes of the current subgraph and
    removes the removable node with the largest gain; ties go to the node
    farther from the queries, then to the lower id. The earliest subgraph
    with maximal density modularity is returned.

    ``articulation`` replaces the DFS articulation computation (used by the
    tests to plug in a brute-force version).
    """
    q, start = _start(g, q)
    state = CommunityState(g, start, q)
    dist = bfs_distances(g, q).dist
    m = g.m
    deg = g.deg
    if articulation is None:
        def articulation(st):
            return _articulation(g.adj, st.member, st.nodes())

    order = []
    best_dm = state.dm()
    best_it = 0
    while True:
        cut = articulation(state)
        best_key = None
        pick = -1
        d_s = state.d
        for v in state.nodes():
            if v in cut or v in state.protected:
                continue
            dv = deg[v]
            key = (-4 * m * state.k[v] + 2 * d_s * dv - dv * dv, dist[v], -v)
            if best_key is None or key > best_key:
                best_key = key
                pick = v
        if pick < 0:
            break
        state.remove(pick)
        order.append(pick)
        cur = state.dm()
        if cur > best_dm:
            best_dm = cur
            best_it = len(order)
    return _result(g, start, "nca", q, best_it, order)


def layer_prune(g: Graph, state: CommunityState, dindex: DistanceIndex) -> CommunityState:
    """Strip whole outermost distance layers while that helps.

    Scores each ball ``layers[0..t]`` of the state and shrinks the state to
    the best one (ties keep the larger ball). Removed nodes are recorded in
    ``state.pruned`` in removal order.
    """
    dist = dindex.dist
    layers = [[v for v in layer if v in state] for layer in dindex.layers]
    while len(layers) > 1 and not layers[-1]:
        layers.pop()
    D = len(layers) - 1
    state.pruned = []
    if D <= 0:
        return state
    # nested counts per radius
    size = [0] * (D + 1)
    deg = [0] * (D + 1)
    edges = [0] * (D + 1)
    for i, layer in enumerate(layers):
        for v in layer:
            size[i] += 1
            deg[i] += g.deg[v]
            for w in g.adj[v]:
                # count each edge once, at the layer of its farther endpoint
                if w in state and (dist[w] < i or (dist[w] == i and w < v)):
                    edges[i] += 1
    best_t, best = 0, None
    s = l = d = 0
    for t in range(D + 1):
        s += size[t]
        l += edges[t]
        d += deg[t]
        val = _dm(l, d, s, g.m)
        if best is None or val >= best:
            best, best_t = val, t
    for layer in reversed(layers[best_t + 1:]):
        for v in reversed(layer):
            state.remove(v)
            state.pruned.append(v)
    return state


def fpa(g: Graph, q: Iterable[int], pruning: bool = True, peel_inner: bool = True) -> SearchResult:
    """Fast peeling search.

    Layers of hop distance from the connected query set are peeled from the
    outside in. Within a layer the node with the largest density ratio
    ``deg(v) / k(v)`` goes first (ties: lowest id); only neighbors in the same
    layer are re-keyed after a removal. A state replaces the incumbent when
    its density modularity is greater than or equal to it.

    With ``pruning`` the search first keeps the best ball of whole layers and
    peels from that ball's outermost layer inward. ``peel_inner=False``
    peels the outermost layer of the ball only; that variant keeps a
    neighboring clique when the query sits on a bridge (see tests).
    """
    q, start = _start(g, q)
    protected = connect_queries(g, q)
    state = CommunityState(g, start, protected)
    dindex = bfs_distances(g, protected, state.member)
    dist = dindex.dist

    order = []
    if pruning:
        layer_prune(g, state, dindex)
        order.extend(state.pruned)
        outer = max(dist[v] for v in state.nodes())
        todo = list(range(outer, 0, -1)) if peel_inner else [outer][:outer]
    else:
        todo = list(range(dindex.D, 0, -1))

    best_dm = state.dm()
    best_it = len(order)
    deg = g.deg
    k = state.k
    adj = g.adj
    member = state.member
    for level in todo:
        cand = [v for v in dindex.layers[level] if member[v]]
        # entries are (-ratio, id); stale entries are skipped on pop
        heap = [(-deg[v] / k[v], v) for v in cand]
        heapq.heapify(heap)
        live = set(cand)
        while heap:
            negr, u = heapq.heappop(heap)
            if u not in live or negr != -deg[u] / k[u]:
                continue
            live.discard(u)
            state.remove(u)
            order.append(u)
            for w in adj[u]:
                if member[w] and w in live:
                    heapq.heappush(heap, (-deg[w] / k[w], w))
            cur = state.dm()
            if cur >= best_dm:
                best_dm = cur
                best_it = len(order)
    return _result(g, start, "fpa" if pruning else "fpa-nopruning", q, best_it, order)
