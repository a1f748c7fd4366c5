"""Goodness functions for a single community.

All scores are plain floats. Density modularity is always evaluated as
``l/size - d*d/(4*m*size)`` so that repeated evaluations of the same counts
compare exactly equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import DanglingNodeError, EmptyGraphError
from .graph import Graph, as_nodeset, induced_counts


@dataclass(frozen=True)
class CommunityCounts:
    """Sufficient statistics of a community ``C``.

    ``l`` is the internal edge count (or internal weight), ``d`` the sum of
    degrees (or node strengths) measured in the whole graph, and ``m`` the
    graph's edge count (or total weight).
    """

    size: int
    l: float
    d: float
    m: float

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("community must contain at least one node")
        if self.l < 0 or self.d < 2 * self.l:
            raise ValueError(f"inconsistent counts l={self.l}, d={self.d}")


def counts_of(g: Graph, nodes: Iterable[int], weighted: bool = False) -> CommunityCounts:
    nodes = as_nodeset(nodes)
    ic = induced_counts(g, nodes)
    if weighted:
        d = float(sum(g.strength[v] for v in nodes))
        return CommunityCounts(len(nodes), ic.w, d, g.w_G)
    return CommunityCounts(len(nodes), ic.l, ic.d, g.m)


def _dm(l, d, size, m) -> float:
    return l / size - d * d / (4 * m * size)


def _cm(l, d, m) -> float:
    return l / m - d * d / (4 * m * m)


def classic_modularity(c: CommunityCounts) -> float:
    if c.m <= 0:
        raise EmptyGraphError("modularity undefined on a graph without edges")
    return _cm(c.l, c.d, c.m)


def density_modularity(c: CommunityCounts) -> float:
    if c.m <= 0:
        raise EmptyGraphError("density modularity undefined on a graph without edges")
    return _dm(c.l, c.d, c.size, c.m)


def density_modularity_weighted(c: CommunityCounts) -> float:
    """Weighted form: ``(w_C - d_C^2 / (4 w_G)) / |C|``.

    ``c.l`` holds the internal weight, ``c.d`` the summed node strengths and
    ``c.m`` the total edge weight.
    """
    if c.m <= 0:
        raise EmptyGraphError("total edge weight must be positive")
    return (c.l - c.d * c.d / (4 * c.m)) / c.size


def updated_density_modularity(s: CommunityCounts, d_v: int, k_vs: int) -> float:
    """Density modularity of ``S \\ {v}`` from the counts of ``S``."""
    if s.size < 2:
        raise ValueError("cannot remove a node from a singleton community")
    return _dm(s.l - k_vs, s.d - d_v, s.size - 1, s.m)


def dm_gain(s: CommunityCounts, d_v: int, k_vs: int):
    """Removal gain ``-4 m k + 2 d_S d_v - d_v^2``.

    Orders candidates exactly as :func:`updated_density_modularity` does; with
    integer counts the result is an exact int.
    """
    return -4 * s.m * k_vs + 2 * s.d * d_v - d_v * d_v


def density_ratio(d_v: int, k_vs: int) -> float:
    if k_vs <= 0:
        raise DanglingNodeError(f"node has no neighbor in the community (degree {d_v})")
    return d_v / k_vs


class FreeRiderScores(NamedTuple):
    cm_s: float
    cm_union: float
    dm_s: float
    dm_union: float


def free_rider_pair_check(g: Graph, s: Iterable[int], s_star: Iterable[int]) -> FreeRiderScores:
    """CM and DM of ``S`` and of ``S | S*``, both counted from scratch."""
    s = set(as_nodeset(s))
    s_star = set(as_nodeset(s_star))
    if not s or not s_star:
        raise ValueError("both node sets must be non-empty")
    cs = counts_of(g, s)
    cu = counts_of(g, s | s_star)
    return FreeRiderScores(
        classic_modularity(cs), classic_modularity(cu),
        density_modularity(cs), density_modularity(cu),
    )


def score(g: Graph, nodes: Iterable[int]) -> tuple[float, float]:
    """``(DM, CM)`` of a node set."""
    c = counts_of(g, nodes)
    return density_modularity(c), classic_modularity(c)
