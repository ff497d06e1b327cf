import math

import networkx as nx
import pytest

from conftest import brute_super_connectivity, graph_from_edges, random_connected_edges, to_networkx
from johnson_conn.connectivity import (
    INFINITY,
    VertexCut,
    components,
    cut_structure_properties,
    disjoint_paths,
    global_vertex_connectivity,
    is_super_vertex_cut,
    local_vertex_connectivity,
    min_cut_structure_check,
    min_edge_pair_separator,
    super_connectivity_exact,
    super_cut_oracle,
)
from johnson_conn.errors import (
    AdjacentTerminalsError,
    DegenerateGraphError,
    EmptyGraphError,
    InvalidPairError,
    NotConnectedError,
    NoVertexCutError,
    TooLargeError,
)
from johnson_conn.subset_graph import GraphParams, SubsetVertex, johnson_graph, kneser_graph
from johnson_conn.witnesses import cut_jn2


def R(g, *entries):
    return g.rank(SubsetVertex.of(entries))


# -- components and certificates ------------------------------------------------------


def test_components_of_whole_graph():
    g = johnson_graph(5, 2)
    assert components(g, VertexCut.of([])) == [tuple(range(10))]


def test_components_octahedron_minus_neighbourhood():
    g = johnson_graph(4, 2)
    cut = [R(g, 1, 3), R(g, 1, 4), R(g, 2, 3), R(g, 2, 4)]
    assert components(g, cut) == [(R(g, 1, 2),), (R(g, 3, 4),)]


def test_components_after_jn2_cut():
    g = johnson_graph(6, 2)
    comps = components(g, cut_jn2(6, graph=g))
    assert len(comps) >= 2 and min(map(len, comps)) >= 2


def test_components_of_empty_remainder():
    g = johnson_graph(4, 2)
    with pytest.raises(EmptyGraphError):
        components(g, range(6))


def test_neighbourhood_cut_is_not_super():
    g = johnson_graph(6, 3)
    for v in (0, 7, 19):
        cert = is_super_vertex_cut(g, g.neighbors(v))
        assert cert.is_disconnecting and not cert.is_super
        assert (v,) in cert.components


def test_jn2_cut_on_j72_is_super():
    g = johnson_graph(7, 2)
    cert = is_super_vertex_cut(g, cut_jn2(7, (1, 2, 3), graph=g))
    assert cert.is_super and len(cert.cut) == 12


def test_empty_cut_is_not_super():
    cert = is_super_vertex_cut(johnson_graph(6, 2), [])
    assert not cert.is_super and not cert.is_disconnecting


# -- local and global connectivity ----------------------------------------------------


def test_local_connectivity_octahedron():
    g = johnson_graph(4, 2)
    assert local_vertex_connectivity(g, R(g, 1, 2), R(g, 3, 4)) == 4


def test_local_connectivity_j63_every_far_pair():
    g = johnson_graph(6, 3)
    for s in range(len(g)):
        for t in range(s + 1, len(g)):
            if not g.has_edge(s, t):
                assert local_vertex_connectivity(g, s, t) == 9


def test_local_connectivity_petersen():
    g = kneser_graph(5, 2)
    for s in range(10):
        for t in range(s + 1, 10):
            if not g.has_edge(s, t):
                assert local_vertex_connectivity(g, s, t) == 3


def test_local_connectivity_rejects_adjacent():
    g = johnson_graph(4, 2)
    with pytest.raises(AdjacentTerminalsError):
        local_vertex_connectivity(g, R(g, 1, 2), R(g, 1, 3))


@pytest.mark.parametrize("n,k,want", [(6, 2, 8), (7, 3, 12), (9, 4, 20), (5, 2, 6)])
def test_global_connectivity(n, k, want):
    g = johnson_graph(n, k)
    kappa, cut = global_vertex_connectivity(g)
    assert kappa == want == len(cut)
    assert is_super_vertex_cut(g, cut).is_disconnecting


def test_global_connectivity_complete_graph():
    with pytest.raises(NoVertexCutError) as info:
        global_vertex_connectivity(johnson_graph(6, 1))
    assert info.value.kappa == 5


def test_global_connectivity_rejects_degenerate():
    with pytest.raises(DegenerateGraphError):
        global_vertex_connectivity(johnson_graph(4, 4))


def test_global_connectivity_rejects_disconnected():
    g = graph_from_edges(GraphParams(4, 2), [(0, 1), (2, 3), (3, 4)])
    with pytest.raises(NotConnectedError):
        global_vertex_connectivity(g)


# -- edge-pair separators --------------------------------------------------------------


def test_pair_separator_j62():
    g = johnson_graph(6, 2)
    e = (R(g, 1, 2), R(g, 1, 3))
    f = (R(g, 4, 5), R(g, 4, 6))
    sep = min_edge_pair_separator(g, e, f)
    assert sep.separable and sep.size <= 9
    grid = [R(g, a, b) for a in (1, 2, 3) for b in (4, 5, 6)]
    comps = components(g, grid)
    side = {v: i for i, c in enumerate(comps) for v in c}
    assert side[e[0]] == side[e[1]] != side[f[0]] == side[f[1]]


def test_pair_separator_octahedron_brute_force():
    g = johnson_graph(4, 2)
    h = to_networkx(g)
    for e in g.edges():
        for f in g.edges():
            if set(e) & set(f):
                continue
            sep = min_edge_pair_separator(g, e, f)
            if any(g.has_edge(a, b) for a in e for b in f):
                assert not sep.separable
            else:
                # contract each edge to a terminal and compare with networkx
                hh = nx.contracted_nodes(nx.contracted_nodes(h, *e, self_loops=False), *f, self_loops=False)
                assert sep.size == len(nx.minimum_node_cut(hh, e[0], f[0]))


def test_pair_separator_complete_graph_is_inseparable():
    g = johnson_graph(5, 1)
    assert not min_edge_pair_separator(g, (0, 1), (2, 3)).separable


def test_pair_separator_rejects_overlap_and_non_edges():
    g = johnson_graph(6, 2)
    with pytest.raises(InvalidPairError):
        min_edge_pair_separator(g, (0, 1), (1, 2))
    with pytest.raises(InvalidPairError):
        min_edge_pair_separator(g, (R(g, 1, 2), R(g, 3, 4)), (R(g, 5, 6), R(g, 4, 6)))


# -- super-connectivity -----------------------------------------------------------------


@pytest.mark.parametrize("n,k,want", [(6, 2, 9), (6, 3, 12), (7, 3, 17)])
def test_flow_search_values(n, k, want):
    g = johnson_graph(n, k)
    rep = super_connectivity_exact(g)
    assert rep.status == "exact" and rep.method == "flow-search"
    assert rep.kappa_prime == want
    cert = rep.kappa_prime_witness
    assert cert.is_super and len(cert.cut) == want
    assert rep.kappa_prime > rep.kappa


def test_flow_search_never_claims_infinity():
    rep = super_connectivity_exact(johnson_graph(5, 2))
    assert rep.status == "none-found" and rep.kappa_prime is None


def test_flow_search_rejects_bad_inputs():
    with pytest.raises(DegenerateGraphError):
        super_connectivity_exact(johnson_graph(3, 3))
    with pytest.raises(NotConnectedError):
        super_connectivity_exact(graph_from_edges(GraphParams(4, 2), [(0, 1), (2, 3)]))


def test_flow_search_budget():
    rep = super_connectivity_exact(johnson_graph(7, 3), budget=5)
    assert rep.status == "budget-exceeded" and rep.kappa_prime is None
    assert rep.lower_bound == 12 and rep.upper_bound == 17


def test_flow_search_is_independent_of_worker_count():
    for n, k in [(7, 2), (6, 3)]:
        g = johnson_graph(n, k)
        one = super_connectivity_exact(g, workers=1)
        two = super_connectivity_exact(g, workers=3)
        assert one.kappa_prime == two.kappa_prime
        assert one.kappa_prime_witness == two.kappa_prime_witness


def test_oracle_values():
    rep = super_cut_oracle(johnson_graph(5, 2))
    assert rep.kappa_prime == INFINITY and rep.exhaustion is not None
    assert rep.exhaustion.max_cut_size == 6
    assert rep.exhaustion.subsets_examined == sum(math.comb(10, s) for s in range(7))
    assert super_cut_oracle(johnson_graph(6, 2)).kappa_prime == 9
    pet = super_cut_oracle(kneser_graph(5, 2))
    assert pet.kappa_prime == 4 and pet.kappa_prime_witness.is_super


def test_oracle_cap():
    with pytest.raises(TooLargeError):
        super_cut_oracle(johnson_graph(7, 3))
    assert super_cut_oracle(johnson_graph(7, 2), max_vertices=21).kappa_prime == 12


def test_oracle_all_minimum_cuts_j62():
    rep = super_cut_oracle(johnson_graph(6, 2), all_minimum=True)
    # one cut per unordered split {T, [6] - T} of the ground set into triples
    assert len(rep.all_minimum_cuts) == math.comb(6, 3) // 2
    g = johnson_graph(6, 2)
    assert {c.removed for c in rep.all_minimum_cuts} == {
        cut_jn2(6, t, graph=g).removed for t in [(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 2, 6), (1, 3, 4),
                                                 (1, 3, 5), (1, 3, 6), (1, 4, 5), (1, 4, 6), (1, 5, 6)]
    }


def test_oracle_small_graphs():
    assert super_cut_oracle(johnson_graph(3, 2)).kappa_prime == INFINITY
    assert super_cut_oracle(johnson_graph(2, 1)).kappa_prime == INFINITY
    assert super_cut_oracle(johnson_graph(3, 3)).kappa_prime == INFINITY


def test_oracle_and_flow_agree_on_random_graphs(rng):
    for _ in range(30):
        nv = rng.choice([(5, 2), (6, 2)])
        p = GraphParams(*nv)
        g = graph_from_edges(p, random_connected_edges(rng, math.comb(*nv), rng.uniform(0.2, 0.5)))
        orc = super_cut_oracle(g)
        flow = super_connectivity_exact(g, seed_bound=False)
        if orc.kappa_prime == INFINITY:
            assert flow.status == "none-found"
        else:
            assert flow.kappa_prime == orc.kappa_prime
            assert flow.kappa_prime_witness.is_super
        if len(g) <= 10:
            assert orc.kappa_prime == brute_super_connectivity(g)


# -- structure checks -----------------------------------------------------------------------


# antipodal vertices of the octahedron share a neighbourhood, so J(4,2) has only three
@pytest.mark.parametrize("n,kappa,cuts", [(4, 4, 3), (5, 6, 10)])
def test_min_cut_structure(n, kappa, cuts):
    s = min_cut_structure_check(johnson_graph(n, 2))
    assert s.kappa == kappa and s.minimum_cuts == cuts and s.all_neighbourhoods


def test_min_cut_structure_complete_graph_is_vacuous():
    s = min_cut_structure_check(johnson_graph(5, 1))
    assert s.minimum_cuts == 0 and s.all_neighbourhoods


def test_min_cut_structure_detects_non_neighbourhood_cut():
    # a path 0-1-2-3-4 has minimum cuts {1}, {2}, {3}; only {1} and {3} are neighbourhoods
    g = graph_from_edges(GraphParams(5, 1), [(0, 1), (1, 2), (2, 3), (3, 4)])
    s = min_cut_structure_check(g)
    assert s.kappa == 1 and s.minimum_cuts == 3 and not s.all_neighbourhoods
    assert s.offending == ((2,),)


def test_min_cut_structure_guard():
    with pytest.raises(TooLargeError):
        min_cut_structure_check(johnson_graph(7, 3), guard=1000)


def test_cut_structure_properties_jn2():
    g = johnson_graph(7, 2)
    props = cut_structure_properties(g, is_super_vertex_cut(g, cut_jn2(7, graph=g)))
    assert all(props.values())


def test_certificate_components_are_reproducible():
    g = johnson_graph(6, 3)
    cert = super_connectivity_exact(g).kappa_prime_witness
    assert tuple(components(g, cert.cut)) == cert.components
    union = sorted(v for c in cert.components for v in c)
    assert union == sorted(set(range(len(g))) - cert.cut.removed)


# -- Menger consistency ---------------------------------------------------------------------


def _check_paths(g, s, t, paths):
    inner = [v for p in paths for v in p[1:-1]]
    assert len(inner) == len(set(inner))
    for p in paths:
        assert p[0] == s and p[-1] == t
        assert all(g.has_edge(a, b) for a, b in zip(p, p[1:]))


@pytest.mark.parametrize("n,k,t", [(6, 2, 1), (6, 3, 2), (5, 2, 0), (7, 3, 1)])
def test_paths_match_local_connectivity(n, k, t):
    from johnson_conn.subset_graph import build_graph

    g = build_graph(GraphParams(n, k, t))
    h = to_networkx(g)
    far = [(s, u) for s in range(len(g)) for u in range(s + 1, len(g)) if not g.has_edge(s, u)][:40]
    for s, u in far:
        paths = disjoint_paths(g, s, u)
        assert len(paths) == local_vertex_connectivity(g, s, u) == nx.node_connectivity(h, s, u)
        _check_paths(g, s, u, paths)


def test_paths_on_random_graphs(rng):
    for _ in range(25):
        g = graph_from_edges(GraphParams(6, 2), random_connected_edges(rng, 15, rng.uniform(0.15, 0.5)))
        h = to_networkx(g)
        pairs = [(s, u) for s in range(15) for u in range(s + 1, 15) if not g.has_edge(s, u)]
        for s, u in rng.sample(pairs, min(6, len(pairs))):
            paths = disjoint_paths(g, s, u)
            assert len(paths) == nx.node_connectivity(h, s, u)
            _check_paths(g, s, u, paths)
        if not g.is_complete():
            assert global_vertex_connectivity(g)[0] == nx.node_connectivity(h)
