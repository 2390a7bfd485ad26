import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cisgraphs.graphs import (
    BigGraph,
    Graph,
    GraphError,
    bits,
    complement,
    disjoint_union,
    encode_graph6,
    is_isomorphic,
    iso_invariant,
    join,
    mask_of,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    random_graph,
)


def graphs(max_n=10):
    @st.composite
    def build(draw):
        n = draw(st.integers(1, max_n))
        pairs = list(itertools.combinations(range(n), 2))
        picks = draw(st.lists(st.booleans(), min_size=len(pairs),
                              max_size=len(pairs)))
        return Graph(n, [p for p, keep in zip(pairs, picks) if keep])

    return build()


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_bits_and_mask():
    assert list(bits(0b101001)) == [0, 3, 5]
    assert mask_of([0, 3, 5]) == 0b101001
    assert list(bits(0)) == []


def test_construction_and_basics():
    g = Graph(4, [(0, 1), (1, 2)])
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert sorted(g.edges()) == [(0, 1), (1, 2)]
    assert g.edge_count() == 2
    assert g.closed_nbhd(3) == 0b1000
    assert g.is_clique(0b0011)
    assert not g.is_clique(0b0101)
    assert g.is_stable(0b1001)
    assert not g.is_stable(0b0011)


def test_construction_errors():
    with pytest.raises(GraphError):
        Graph(0)
    with pytest.raises(GraphError):
        Graph(65)
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])


def test_subgraph_relabels():
    g = Graph(5, [(0, 2), (2, 4), (1, 3)])
    h = g.subgraph(mask_of([0, 2, 4]))
    assert h.n == 3
    assert sorted(h.edges()) == [(0, 1), (1, 2)]


def test_complement_involution():
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    assert complement(complement(g)) == g
    cg = complement(g)
    for u, v in itertools.combinations(range(5), 2):
        assert g.has_edge(u, v) != cg.has_edge(u, v)


def test_disjoint_union_and_join():
    k2 = Graph(2, [(0, 1)])
    g = disjoint_union(k2, k2)
    assert g.n == 4 and sorted(g.edges()) == [(0, 1), (2, 3)]
    j = join(k2, k2)
    assert j.edge_count() == 2 + 4


@given(graphs())
def test_graph6_round_trip(g):
    assert parse_graph6(encode_graph6(g)) == g


def test_graph6_known_strings():
    # standard encodings: P4 is "Ch", C4 is "Cl" in canonical labelings
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert parse_graph6(encode_graph6(p4)) == p4
    assert parse_graph6("D?{") == Graph(5, [(0, 4), (1, 4), (2, 4), (3, 4)])
    # header prefix accepted
    assert parse_graph6(">>graph6<<Ch") == parse_graph6("Ch")


def test_graph6_against_networkx():
    rng = random.Random(7)
    for _ in range(25):
        g = random_graph(rng.randint(1, 20), 0.4, rng)
        theirs = nx.from_graph6_bytes(encode_graph6(g).encode())
        assert sorted(theirs.edges()) == sorted(g.edges())
        ours = parse_graph6(nx.to_graph6_bytes(to_nx(g), header=False)
                            .decode().strip())
        assert ours == g


def test_graph6_extended_order():
    rng = random.Random(1)
    for n in (63, 64):
        g = random_graph(n, 0.3, rng)
        s = encode_graph6(g)
        assert s.startswith("~")
        assert parse_graph6(s) == g


def test_graph6_errors():
    with pytest.raises(GraphError):
        parse_graph6("")
    with pytest.raises(GraphError):
        parse_graph6("C")  # truncated payload
    with pytest.raises(GraphError):
        parse_graph6("Chh")  # trailing bytes
    with pytest.raises(GraphError):
        parse_graph6("~~????")  # order too large


def test_parse_edge_list():
    g = parse_edge_list("0 1\n1 2\n")
    assert g.n == 3 and g.edge_count() == 2
    g = parse_edge_list("5\n0 1\n# comment\n\n3 4\n")
    assert g.n == 5 and g.edge_count() == 2
    with pytest.raises(GraphError):
        parse_edge_list("0 1 2\n")
    with pytest.raises(GraphError):
        parse_edge_list("")


def test_parse_graph_dispatch():
    assert parse_graph("Ch").n == 4
    assert parse_graph("0 1\n1 2").n == 3


def test_is_isomorphic_basic():
    p4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    p4b = Graph(4, [(2, 0), (0, 3), (3, 1)])
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert is_isomorphic(p4, p4b)
    assert not is_isomorphic(p4, c4)


def test_is_isomorphic_against_networkx():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 8)
        g1 = random_graph(n, 0.5, rng)
        if rng.random() < 0.5:
            perm = list(range(n))
            rng.shuffle(perm)
            g2 = Graph(n, [(perm[u], perm[v]) for u, v in g1.edges()])
        else:
            g2 = random_graph(n, 0.5, rng)
        expect = nx.is_isomorphic(to_nx(g1), to_nx(g2))
        assert is_isomorphic(g1, g2) == expect
        if is_isomorphic(g1, g2):
            assert iso_invariant(g1) == iso_invariant(g2)


def test_big_graph_basics():
    g = BigGraph(70, [(0, 1), (1, 2), (68, 69)])
    assert g.has_edge(1, 0)
    assert g.degree(1) == 2
    assert g.edge_count() == 3
    assert g.is_clique({0, 1})
    assert not g.is_clique({0, 2})
    assert g.is_stable({0, 2, 68})
    assert g.is_maximal_clique({0, 1, 2}) is False
    assert g.is_maximal_clique({68, 69})
    co = g.complement()
    assert co.has_edge(0, 2) and not co.has_edge(0, 1)
    both = g.disjoint_union(g)
    assert both.n == 140 and both.edge_count() == 6


def test_big_graph_edge_simplicial():
    tri = BigGraph(3, [(0, 1), (1, 2), (0, 2)])
    assert tri.is_edge_simplicial()
    c4 = BigGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert not c4.is_edge_simplicial()


@settings(max_examples=30)
@given(graphs(max_n=8))
def test_complement_degree_sum(g):
    for v in range(g.n):
        assert g.degree(v) + complement(g).degree(v) == g.n - 1
