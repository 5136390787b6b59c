import random

import pytest

from domishold import (
    Hypergraph,
    add_universal_vertex,
    complete,
    cycle,
    dnf_of_hypergraph,
    dually_sperner_violation,
    find_induced,
    independent_neighborhood_hypergraph,
    is_dually_sperner,
    minimal_transversals,
    neighborhood_split_graph,
    path,
    reduced_neighborhood_hypergraph,
    remove_universal_vertex,
    split_incidence_graph,
    split_partition,
    sperner_reduce,
    threshold_in_td_sense,
)
from domishold.corpus import random_hypergraph
from domishold.errors import CapabilityError
from domishold.hypergraphs import is_transversal_family

from conftest import brute_minimal_transversals


def H(n, *edges):
    return Hypergraph.make(n, edges)


def edgesets(hg):
    return sorted(tuple(sorted(e)) for e in hg.edges)


def test_multiset_semantics_and_canonical_equality():
    a = H(3, [0, 1], [0, 1], [2])
    b = H(3, [2], [1, 0], [0, 1])
    assert a == b
    assert len(a.edges) == 3
    with pytest.raises(ValueError):
        H(2, [0, 5])


def test_sperner_reduce_examples():
    assert edgesets(sperner_reduce(H(3, [0, 1], [0, 1, 2]))) == [(0, 1)]
    assert edgesets(sperner_reduce(H(1, [0], [0]))) == [(0,)]
    got = sperner_reduce(H(3, [0, 1], [1, 2], [0, 1, 2], [1, 2]))
    assert edgesets(got) == [(0, 1), (1, 2)]


def test_sperner_reduce_idempotent_and_containment_equivalent():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(1, 7)
        hg = random_hypergraph(rng, n, 6, allow_empty_edge=True)
        red = sperner_reduce(hg)
        assert sperner_reduce(red) == red
        for bits in range(1 << n):
            X = {i for i in range(n) if bits >> i & 1}
            assert any(e <= X for e in hg.edges) == any(e <= X for e in red.edges)


def test_dually_sperner_examples():
    assert is_dually_sperner(H(3, [0, 1], [0, 2], [1, 2]))
    bad = H(4, [0, 1], [2, 3])
    pair = dually_sperner_violation(bad)
    assert pair is not None and {frozenset(p) for p in pair} == {
        frozenset({0, 1}),
        frozenset({2, 3}),
    }
    assert is_dually_sperner(H(5, [0, 1, 2]))
    assert is_dually_sperner(H(4, [0, 1], [0, 1]))  # duplicates differ in nothing


def test_minimal_transversals_examples():
    assert edgesets(H(3, *minimal_transversals(H(3, [0, 1], [0, 2])))) == [(0,), (1, 2)]
    assert minimal_transversals(H(1, [0])) == (frozenset({0}),)
    assert minimal_transversals(H(2)) == (frozenset(),)
    assert minimal_transversals(H(2, [])) == ()  # the empty edge kills everything


def test_minimal_transversals_against_bruteforce():
    rng = random.Random(12)
    for _ in range(80):
        n = rng.randint(1, 7)
        hg = random_hypergraph(rng, n, 5)
        got = list(minimal_transversals(hg))
        assert got == brute_minimal_transversals(n, hg.edges)
        assert is_transversal_family(hg, got)


def test_double_dualization_is_sperner_reduction():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(1, 7)
        hg = sperner_reduce(random_hypergraph(rng, n, 5))
        double = minimal_transversals(Hypergraph(n, minimal_transversals(hg)))
        assert double == hg.edges


def test_transversal_cap_raises():
    # n/2 disjoint pairs: transversal count 2^(n/2) exceeds a small cap
    hg = Hypergraph.make(12, [[2 * i, 2 * i + 1] for i in range(6)])
    with pytest.raises(CapabilityError):
        minimal_transversals(hg, cap=10)


def test_split_incidence_graph_examples():
    G, K, I = split_incidence_graph(H(2, [0, 1]))
    assert (G.n, len(G.edges())) == (3, 3)  # K3
    G, K, I = split_incidence_graph(H(1, []))
    assert (G.n, len(G.edges())) == (2, 0)
    G, K, I = split_incidence_graph(H(3, [0, 1], [0, 2]))
    assert K == frozenset({0, 1, 2}) and I == frozenset({3, 4})
    assert sorted(len(G.adj[v]) for v in I) == [2, 2]
    assert split_partition(G) is not None


def test_split_incidence_inverts_through_neighborhoods():
    rng = random.Random(14)
    for _ in range(40):
        n = rng.randint(1, 6)
        hg = random_hypergraph(rng, n, 5, allow_empty_edge=True)
        G, K, I = split_incidence_graph(hg)
        back = independent_neighborhood_hypergraph(G, K, I)
        assert back == hg


def test_independent_neighborhood_examples():
    G, K, I = split_incidence_graph(H(1, [0], [0], [0]))  # star K1,3 shape
    back = independent_neighborhood_hypergraph(G, K, I)
    assert edgesets(back) == [(0,), (0,), (0,)]
    assert independent_neighborhood_hypergraph(complete(3), {0, 1, 2}, set()).edges == ()
    with pytest.raises(ValueError):
        independent_neighborhood_hypergraph(cycle(4), {0, 1}, {2, 3})


def test_reduced_neighborhood_examples():
    assert edgesets(reduced_neighborhood_hypergraph(cycle(4))) == [(0, 2), (1, 3)]
    rn = reduced_neighborhood_hypergraph(complete(4))
    assert len(rn.edges) == 4 and all(len(e) == 3 for e in rn.edges)
    from domishold import Graph

    withiso = reduced_neighborhood_hypergraph(Graph.from_edges(3, [(0, 1)]))
    assert withiso.edges == (frozenset(),)


def test_neighborhood_split_graph_examples():
    # K2: both neighborhoods are singletons; the result is a path on 4 vertices
    sg = neighborhood_split_graph(complete(2))
    assert sg.n == 4 and find_induced(sg, path(4)) is not None
    sg1 = neighborhood_split_graph(complete(1))
    assert (sg1.n, len(sg1.edges())) == (2, 0)
    sg4 = neighborhood_split_graph(cycle(4))
    assert sg4.n == 6
    inde = [v for v in range(6) if len(sg4.adj[v]) == 2]
    assert sorted(sorted(sg4.adj[v]) for v in inde) == [[0, 2], [1, 3]]


def test_universal_hyper_vertex_examples():
    grown = add_universal_vertex(H(4, [0, 1], [0, 2]))
    assert edgesets(grown) == [(0, 1, 4), (0, 2, 4)]
    back = remove_universal_vertex(H(3, [0, 1], [0, 2]), 0)
    assert edgesets(back) == [(0,), (1,)]
    assert edgesets(add_universal_vertex(H(1, []))) == [(1,)]
    with pytest.raises(ValueError):
        remove_universal_vertex(H(3, [0, 1], [2]), 0)


def test_universal_hyper_vertex_preserves_thresholdness():
    rng = random.Random(15)
    for _ in range(40):
        n = rng.randint(1, 6)
        hg = random_hypergraph(rng, n, 4)
        before = threshold_in_td_sense(dnf_of_hypergraph(hg))
        grown = add_universal_vertex(hg)
        assert threshold_in_td_sense(dnf_of_hypergraph(grown)) == before
        back = remove_universal_vertex(grown, n)
        assert back == hg


def test_every_dually_sperner_hypergraph_is_threshold():
    from domishold.corpus import random_dually_sperner_hypergraph

    rng = random.Random(16)
    for _ in range(60):
        hg = random_dually_sperner_hypergraph(rng, rng.randint(2, 9), 6)
        assert threshold_in_td_sense(dnf_of_hypergraph(hg))
