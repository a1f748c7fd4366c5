"""Undirected simple graphs in CSR form, plus the traversal primitives the
searches are built on (components, multi-source BFS layers, articulation
nodes, induced counts).
"""
from __future__ import annotations

from bisect import bisect_left
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, TextIO

import numpy as np

from .errors import (
    DisconnectedInputError,
    EdgeListParseError,
    QueriesDisconnectedError,
    SelfLoopError,
    UnknownNodeError,
)

UNREACHABLE = -1


def as_nodeset(nodes: Iterable[int]) -> tuple[int, ...]:
    """Normalize a node collection to a sorted, duplicate-free tuple."""
    return tuple(sorted({int(v) for v in nodes}))


class Graph:
    """Immutable undirected simple graph.

    Nodes are dense ints ``0..n-1``; ``labels[v]`` is the external id the node
    had on ingestion. Adjacency lives in CSR arrays (``indptr``/``indices``)
    with each neighbor list sorted ascending; ``adj`` mirrors it as Python
    lists because the search loops are pure Python.
    """

    def __init__(self, n, edges, weights=None, labels=None):
        n = int(n)
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if weights is not None:
            weights = np.asarray(weights, dtype=np.float64).reshape(-1)
            if len(weights) != len(edges):
                raise ValueError("one weight per edge required")
            if np.any(weights < 0):
                raise ValueError("edge weights must be nonnegative")
        if len(edges):
            if edges.min() < 0 or edges.max() >= n:
                raise ValueError("edge endpoint out of range")
            loops = edges[:, 0] == edges[:, 1]
            if loops.any():
                raise SelfLoopError(int(edges[loops][0, 0]))
        lo = np.minimum(edges[:, 0], edges[:, 1])
        hi = np.maximum(edges[:, 0], edges[:, 1])
        key = lo * max(n, 1) + hi
        uniq, inverse = np.unique(key, return_inverse=True)
        lo, hi = uniq // max(n, 1), uniq % max(n, 1)
        if weights is not None:
            weights = np.bincount(inverse.reshape(-1), weights=weights, minlength=len(uniq))

        src = np.concatenate([lo, hi])
        dst = np.concatenate([hi, lo])
        order = np.lexsort((dst, src))
        src, dst = src[order], dst[order]
        self.n = n
        self.m = len(uniq)
        self.indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=self.indptr[1:])
        self.indices = dst
        self.degree = np.diff(self.indptr)
        if weights is not None:
            self.weights = np.concatenate([weights, weights])[order]
            self.strength = np.bincount(src, weights=self.weights, minlength=n)
            self.w_G = float(weights.sum())
        else:
            self.weights = None
            self.strength = self.degree.astype(np.float64)
            self.w_G = float(self.m)
        if labels is None:
            labels = np.arange(n, dtype=np.int64)
        self.labels = np.asarray(labels, dtype=np.int64)
        if len(self.labels) != n:
            raise ValueError("one label per node required")
        for arr in (self.indptr, self.indices, self.degree, self.strength, self.labels):
            arr.setflags(write=False)
        if self.weights is not None:
            self.weights.setflags(write=False)

        ptr = self.indptr.tolist()
        flat = self.indices.tolist()
        self.adj: list[list[int]] = [flat[ptr[v]:ptr[v + 1]] for v in range(n)]
        self.deg: list[int] = self.degree.tolist()
        self._index = {lab: i for i, lab in enumerate(self.labels.tolist())}

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m}, weighted={self.weighted})"

    @property
    def weighted(self) -> bool:
        return self.weights is not None

    def neighbors(self, v: int) -> list[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.adj[u]
        i = bisect_left(nb, v)
        return i < len(nb) and nb[i] == v

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, in ascending order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def edge_weight(self, u: int, v: int) -> float:
        nb = self.adj[u]
        i = bisect_left(nb, v)
        if i == len(nb) or nb[i] != v:
            raise KeyError((u, v))
        return 1.0 if self.weights is None else float(self.weights[self.indptr[u] + i])

    def internal(self, label: int) -> int:
        try:
            return self._index[int(label)]
        except KeyError:
            raise UnknownNodeError(f"unknown node id {label}") from None

    def internal_ids(self, labels: Iterable[int]) -> tuple[int, ...]:
        return as_nodeset(self.internal(x) for x in labels)

    def external_ids(self, nodes: Iterable[int]) -> list[int]:
        return [int(self.labels[v]) for v in nodes]


def load_edge_list(stream: TextIO, weighted: bool = False) -> Graph:
    """Read a SNAP-style whitespace edge list.

    Lines starting with ``#`` and blank lines are skipped. A third column is
    read as the edge weight when ``weighted`` is set (default 1.0), and
    ignored otherwise. Duplicate edges are merged, summing weights. External
    ids are remapped densely in ascending order.
    """
    pairs = []
    wts = []
    for lineno, line in enumerate(stream, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) not in (2, 3):
            raise EdgeListParseError(lineno, f"expected 2 or 3 fields, got {len(parts)}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer node id in {s!r}") from None
        if u == v:
            raise SelfLoopError(u, lineno)
        w = 1.0
        if weighted and len(parts) == 3:
            try:
                w = float(parts[2])
            except ValueError:
                raise EdgeListParseError(lineno, f"bad weight {parts[2]!r}") from None
            if not w >= 0:
                raise EdgeListParseError(lineno, f"negative weight {parts[2]}")
        pairs.append((u, v))
        wts.append(w)

    if not pairs:
        return Graph(0, np.empty((0, 2), dtype=np.int64), [] if weighted else None)
    raw = np.asarray(pairs, dtype=np.int64)
    labels, inverse = np.unique(raw, return_inverse=True)
    return Graph(len(labels), inverse.reshape(-1, 2), wts if weighted else None, labels)


def write_edge_list(g: Graph, stream: TextIO) -> None:
    stream.write(f"# n={g.n} m={g.m}\n")
    lab = g.labels.tolist()
    for u, v in g.edges():
        if g.weighted:
            stream.write(f"{lab[u]} {lab[v]} {g.edge_weight(u, v):g}\n")
        else:
            stream.write(f"{lab[u]} {lab[v]}\n")


def _reach(g: Graph, start: int, member=None) -> list[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen and (member is None or member[w]):
                seen.add(w)
                stack.append(w)
    return sorted(seen)


def connected_component_containing(g: Graph, q: Iterable[int]) -> tuple[int, ...]:
    q = as_nodeset(q)
    if not q:
        raise ValueError("query set is empty")
    comp = _reach(g, q[0])
    inside = set(comp)
    missing = [v for v in q if v not in inside]
    if missing:
        raise QueriesDisconnectedError(
            f"query nodes {q[0]} and {missing[0]} lie in different components"
        )
    return tuple(comp)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen = bytearray(g.n)
    comps = []
    for s in range(g.n):
        if not seen[s]:
            comp = _reach(g, s)
            for v in comp:
                seen[v] = 1
            comps.append(tuple(comp))
    return comps


def is_connected(g: Graph, nodes: Iterable[int]) -> bool:
    nodes = as_nodeset(nodes)
    if not nodes:
        return True
    member = bytearray(g.n)
    for v in nodes:
        member[v] = 1
    return len(_reach(g, nodes[0], member)) == len(nodes)


@dataclass(frozen=True)
class DistanceIndex:
    """Hop distance of every node from a source set.

    ``dist[v]`` is ``UNREACHABLE`` for nodes outside the sources' component.
    ``layers[i]`` lists the nodes at distance exactly ``i`` in ascending order;
    ``layers[0]`` is the source set.
    """

    dist: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]

    @property
    def D(self) -> int:
        return len(self.layers) - 1


def bfs_distances(g: Graph, sources: Iterable[int], member=None) -> DistanceIndex:
    """Multi-source BFS, optionally confined to nodes with ``member[v]`` set."""
    sources = as_nodeset(sources)
    if not sources:
        raise ValueError("sources must be non-empty")
    dist = [UNREACHABLE] * g.n
    for s in sources:
        dist[s] = 0
    frontier = list(sources)
    layers = [tuple(sources)]
    level = 0
    adj = g.adj
    while frontier:
        level += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if dist[w] == UNREACHABLE and (member is None or member[w]):
                    dist[w] = level
                    nxt.append(w)
        if nxt:
            nxt.sort()
            layers.append(tuple(nxt))
        frontier = nxt
    return DistanceIndex(tuple(dist), tuple(layers))


def articulation_nodes(g: Graph, s: Iterable[int]) -> set[int]:
    """Articulation nodes of the induced subgraph ``G[s]``.

    One iterative DFS with discovery/low-link times; raises
    ``DisconnectedInputError`` if ``G[s]`` is not connected.
    """
    nodes = as_nodeset(s)
    member = bytearray(g.n)
    for v in nodes:
        member[v] = 1
    return _articulation(g.adj, member, nodes)


def _articulation(adj, member, nodes) -> set[int]:
    if not nodes:
        return set()
    root = nodes[0]
    disc = {root: 0}
    low = {root: 0}
    cut = set()
    root_children = 0
    timer = 1
    # (node, parent, iterator position)
    stack = [(root, -1, 0)]
    while stack:
        u, parent, i = stack[-1]
        nb = adj[u]
        while i < len(nb):
            w = nb[i]
            i += 1
            if not member[w] or w == parent:
                continue
            if w in disc:
                if disc[w] < low[u]:
                    low[u] = disc[w]
                continue
            stack[-1] = (u, parent, i)
            disc[w] = low[w] = timer
            timer += 1
            stack.append((w, u, 0))
            break
        else:
            stack.pop()
            if parent >= 0:
                if low[u] < low[parent]:
                    low[parent] = low[u]
                if parent == root:
                    root_children += 1
                elif low[u] >= disc[parent]:
                    cut.add(parent)
    if len(disc) != len(nodes):
        raise DisconnectedInputError("induced subgraph is not connected")
    if root_children >= 2:
        cut.add(root)
    return cut


class InducedCounts(NamedTuple):
    l: int
    w: float
    d: int


def induced_counts(g: Graph, s: Iterable[int]) -> InducedCounts:
    """Internal edge count, internal weight and degree sum (degrees taken in G)."""
    nodes = as_nodeset(s)
    member = bytearray(g.n)
    for v in nodes:
        member[v] = 1
    l2 = 0
    w2 = 0.0
    d = 0
    for u in nodes:
        d += g.deg[u]
        base = g.indptr[u]
        for j, v in enumerate(g.adj[u]):
            if member[v]:
                l2 += 1
                w2 += 1.0 if g.weights is None else float(g.weights[base + j])
    return InducedCounts(l2 // 2, w2 / 2, d)
