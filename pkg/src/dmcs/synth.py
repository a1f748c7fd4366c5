"""Deterministic synthetic graphs with planted ground truth.

Random draws come from numpy's PCG64 (``numpy.random.default_rng(seed)``),
so an edge set is reproducible from ``(config, seed)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TextIO

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class GenConfig:
    kind: str
    params: tuple = ()
    seed: int = 0

    def __post_init__(self):
        if self.kind == "ring_of_cliques":
            num, size = self.params
            if num < 3 or size < 3:
                raise ValueError(f"ring of cliques needs >= 3 cliques of >= 3 nodes, got ({num}, {size})")
        elif self.kind == "planted_partition":
            n, g, p_in, p_out = self.params
            if n < 1 or g < 1 or g > n:
                raise ValueError(f"need 1 <= communities <= n, got n={n}, g={g}")
            if not (0 <= p_in <= 1 and 0 <= p_out <= 1):
                raise ValueError("probabilities must lie in [0, 1]")
        else:
            raise ValueError(f"unknown generator kind {self.kind!r}")

    def build(self) -> tuple[Graph, list[tuple[int, ...]]]:
        if self.kind == "ring_of_cliques":
            return ring_of_cliques(*self.params)
        return planted_partition(*self.params, seed=self.seed)


def ring_of_cliques(num_cliques: int, clique_size: int) -> tuple[Graph, list[tuple[int, ...]]]:
    """``num_cliques`` cliques in a ring; clique ``i``'s first node links to the
    second node of clique ``i+1``. Returns the graph and the cliques."""
    GenConfig("ring_of_cliques", (num_cliques, clique_size))
    s = clique_size
    edges = []
    truth = []
    for c in range(num_cliques):
        base = c * s
        truth.append(tuple(range(base, base + s)))
        edges.extend((base + i, base + j) for i in range(s) for j in range(i + 1, s))
        edges.append((base, ((c + 1) % num_cliques) * s + 1))
    return Graph(num_cliques * s, edges), truth


def block_sizes(n: int, g: int) -> list[int]:
    return [n // g + (1 if i < n % g else 0) for i in range(g)]


def _bernoulli_positions(rng, total: int, p: float) -> np.ndarray:
    """Indices in ``range(total)`` kept by independent Bernoulli(p) trials,
    drawn as geometric gaps in ascending order."""
    if total == 0 or p <= 0:
        return np.empty(0, dtype=np.int64)
    if p >= 1:
        return np.arange(total, dtype=np.int64)
    out = []
    pos = -1
    batch = max(16, int(total * p * 1.1) + 16)
    while True:
        gaps = rng.geometric(p, size=batch)
        idx = pos + np.cumsum(gaps)
        out.append(idx[idx < total])
        if idx[-1] >= total:
            break
        pos = int(idx[-1])
    return np.concatenate(out)


def _triu_pairs(idx: np.ndarray, s: int) -> tuple[np.ndarray, np.ndarray]:
    # row r of the strict upper triangle starts at r*s - r*(r+1)/2
    r = np.arange(s, dtype=np.int64)
    starts = r * s - r * (r + 1) // 2
    rows = np.searchsorted(starts, idx, side="right") - 1
    cols = idx - starts[rows] + rows + 1
    return rows, cols


def planted_partition(n: int, g: int, p_in: float, p_out: float, seed: int = 0):
    """Planted-partition graph with ``g`` contiguous blocks.

    Every pair ``u < v`` is kept independently with ``p_in`` (same block) or
    ``p_out``. Draws follow a fixed order: for each block, its internal pairs
    in lexicographic order, then its pairs with all later blocks' nodes in
    lexicographic order. Returns the graph and the blocks.
    """
    GenConfig("planted_partition", (n, g, p_in, p_out), seed)
    rng = np.random.default_rng(seed)
    sizes = block_sizes(n, g)
    offs = np.concatenate([[0], np.cumsum(sizes)]).astype(np.int64)
    us, vs = [], []
    for a in range(g):
        sa = sizes[a]
        keep = _bernoulli_positions(rng, sa * (sa - 1) // 2, p_in)
        r, c = _triu_pairs(keep, sa)
        us.append(offs[a] + r)
        vs.append(offs[a] + c)
        # every node of block a against every node of the later blocks
        width = n - int(offs[a + 1])
        keep = _bernoulli_positions(rng, sa * width, p_out)
        us.append(offs[a] + keep // max(width, 1))
        vs.append(offs[a + 1] + keep % max(width, 1))
    edges = np.stack([np.concatenate(us), np.concatenate(vs)], axis=1) if us else np.empty((0, 2))
    truth = [tuple(range(int(offs[i]), int(offs[i + 1]))) for i in range(g)]
    return Graph(n, edges), truth


def expected_mixing(n: int, g: int, p_in: float, p_out: float) -> float:
    """Expected fraction of a node's edges that leave its block (equal blocks)."""
    b = n / g
    out = p_out * (n - b)
    return out / (p_in * (b - 1) + out)


def p_in_for_mixing(n: int, g: int, p_out: float, mu: float) -> float:
    """Intra-block probability giving expected mixing ``mu`` for a fixed ``p_out``."""
    b = n / g
    return p_out * (n - b) * (1 - mu) / (mu * (b - 1))


def write_communities(truth, stream: TextIO, labels=None) -> None:
    for comm in truth:
        ids = comm if labels is None else [int(labels[v]) for v in comm]
        stream.write(" ".join(str(v) for v in ids) + "\n")


def read_communities(stream: TextIO) -> list[tuple[int, ...]]:
    out = []
    for line in stream:
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        out.append(tuple(int(x) for x in s.split()))
    return out
