import io

import networkx as nx
import pytest
from hypothesis import strategies as st

from dmcs import Graph, load_edge_list


@st.composite
def graphs(draw, min_n=1, max_n=10, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # random spanning path keeps it connected
        perm = draw(st.permutations(range(n)))
        edges = sorted(set(edges) | {tuple(sorted(p)) for p in zip(perm, perm[1:])})
    return Graph(n, edges)


def to_nx(g, nodes=None):
    h = nx.Graph()
    h.add_nodes_from(range(g.n) if nodes is None else nodes)
    keep = set(h.nodes)
    h.add_edges_from((u, v) for u, v in g.edges() if u in keep and v in keep)
    return h


def from_text(text, weighted=False):
    return load_edge_list(io.StringIO(text), weighted=weighted)


def two_cliques_bridge():
    """Two 4-cliques {0..3}, {4..7}; edge 3-4 bridges them."""
    edges = [(u, v) for c in (range(4), range(4, 8)) for u in c for v in c if u < v]
    return Graph(8, edges + [(3, 4)])


def triangle_pendant():
    """Triangle 0-1-2 with pendant 3 hanging off 0."""
    return Graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


def path(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def bridge_graph():
    return two_cliques_bridge()


# ---- acceptance summary: one line per criterion at the end of the run

_acceptance = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if "test_acceptance.py" not in report.nodeid or not name.startswith("test_ac"):
        return
    if report.when == "call" or report.failed or report.skipped:
        detail = dict(report.user_properties).get("detail", "")
        prev = _acceptance.get(name, ("PASS", ""))[0]
        outcome = "FAIL" if report.failed or prev == "FAIL" else ("SKIP" if report.skipped else "PASS")
        _acceptance[name] = (outcome, detail)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance, key=lambda s: int(s.split("_")[1][2:])):
        outcome, detail = _acceptance[name]
        label = name.split("_")[1].upper()
        terminalreporter.write_line(f"{label:<5} {outcome}  {name[len('test_') + len(label) + 1:]}  {detail}".rstrip())
