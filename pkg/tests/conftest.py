import itertools
import random
import sys

import networkx as nx
import pytest

from johnson_conn.subset_graph import GraphParams, UniformSubsetGraph, enumerate_vertices


def graph_from_edges(nv_params: GraphParams, edges) -> UniformSubsetGraph:
    """Arbitrary graph on the vertex set of ``nv_params`` (adjacency ignores t)."""
    verts = tuple(enumerate_vertices(nv_params))
    adj = [set() for _ in verts]
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return UniformSubsetGraph(nv_params, verts, tuple(tuple(sorted(s)) for s in adj))


def to_networkx(g: UniformSubsetGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(len(g)))
    h.add_edges_from(g.edges())
    return h


def brute_super_connectivity(g: UniformSubsetGraph) -> float:
    """Smallest S with G - S disconnected and free of isolated vertices, via networkx."""
    h = to_networkx(g)
    nodes = list(h.nodes)
    for size in range(len(nodes) - 3):
        for s in itertools.combinations(nodes, size):
            rest = h.subgraph(set(nodes) - set(s))
            comps = list(nx.connected_components(rest))
            if len(comps) >= 2 and min(map(len, comps)) >= 2:
                return size
    return float("inf")


def random_connected_edges(rng: random.Random, nv: int, p: float):
    while True:
        h = nx.gnp_random_graph(nv, p, seed=rng.randrange(1 << 30))
        if nx.is_connected(h):
            return sorted(h.edges())


@pytest.fixture
def rng():
    return random.Random(20240517)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.report_lines():
        terminalreporter.write_line(line)
