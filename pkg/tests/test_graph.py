import random

import networkx as nx
import pytest
from sympy import isprime

from paley_zn.errors import NotAdmissible, NotASquare
from paley_zn.graph import (
    Graph,
    affine_automorphism_check,
    build_graph,
    decomposition_report,
    degree_profile,
    is_complete,
    is_connected,
    is_cycle,
    regular_degree,
    rotate,
    self_complementary_edge_test,
    spanning_cycle_check,
)
from paley_zn.residues import is_admissible, unit_squares

ADMISSIBLE = [n for n in range(3, 501) if is_admissible(n)]


def to_networkx(g):
    graph = nx.Graph()
    graph.add_nodes_from(range(g.n))
    graph.add_edges_from(g.edges())
    return graph


def test_g5_is_the_five_cycle(g5):
    assert list(g5.edges()) == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert is_cycle(g5)


def test_g13(g13):
    assert g13.edge_count == 39
    assert degree_profile(g13) == (6, 6)
    assert not is_complete(g13)
    assert not is_cycle(g13)


@pytest.mark.parametrize("n", [4, 20, 21, 45])
def test_build_rejects_inadmissible(n):
    with pytest.raises(NotAdmissible):
        build_graph(n)


@pytest.mark.parametrize("n", [5, 13, 25, 26, 65])
def test_adjacency_is_unit_square_difference(n):
    g = build_graph(n)
    squares = unit_squares(n)
    for u in range(n):
        for v in range(n):
            assert g.has_edge(u, v) == ((u - v) % n in squares)
    assert g.is_symmetric()
    assert g.edge_count == sum(row.bit_count() for row in g.adj) // 2


@pytest.mark.parametrize("n, degree, edges", [(5, 2, 5), (25, 10, 125), (65, 12, 390), (169, 78, 6591)])
def test_degree_and_edge_count(n, degree, edges):
    g = build_graph(n)
    assert degree_profile(g) == (degree, degree)
    assert regular_degree(n) == degree
    assert g.edge_count == edges


def test_structure_of_every_admissible_graph():
    for n in ADMISSIBLE:
        g = build_graph(n)
        d = regular_degree(n)
        assert degree_profile(g) == (d, d), n
        assert is_connected(g), n
        assert spanning_cycle_check(g), n
        assert not is_complete(g), n
        assert is_cycle(g) == (n in (5, 10)), n
        assert self_complementary_edge_test(n) == isprime(n), n


@pytest.mark.parametrize("n", [5, 10, 13, 26, 65, 85])
def test_connectivity_matches_networkx(n):
    g = build_graph(n)
    assert is_connected(g) == nx.is_connected(to_networkx(g))


def test_disconnected_graph():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert degree_profile(g) == (2, 2)
    assert not is_connected(g)
    assert not is_cycle(g)


@pytest.mark.parametrize("n, expected", [(13, True), (25, False), (65, False), (5, True), (10, False)])
def test_self_complementary_edge_test(n, expected):
    assert self_complementary_edge_test(n) is expected


def test_complete_and_empty_graphs():
    assert is_complete(Graph.complete(4))
    assert Graph.complete(4).edge_count == 6
    assert Graph.empty(3).edge_count == 0
    assert list(Graph.empty(3).edges()) == []


def test_from_edges_rejects_loops():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])


def test_graph_is_immutable(g5):
    with pytest.raises(AttributeError):
        g5.n = 6


def test_rotate():
    assert rotate(0b10010, 1, 5) == 0b00101
    assert rotate(0b10010, 5, 5) == 0b10010


def test_induced_subgraph(g13):
    h = g13.induced([0, 1, 3, 4])
    assert h.n == 4
    # 1-0, 3-0, 4-0, 4-1, 4-3 are edges; 3-1 is not (2 is not a square)
    assert h.edge_count == 5
    assert not h.has_edge(1, 2)


@pytest.mark.parametrize("n, a, b", [(13, 4, 7), (25, 6, 0)])
def test_affine_automorphism(n, a, b):
    assert affine_automorphism_check(build_graph(n), a, b)


def test_affine_requires_square_multiplier(g13):
    with pytest.raises(NotASquare):
        affine_automorphism_check(g13, 2, 0)


@pytest.mark.parametrize("n", [13, 25, 169])
def test_random_affine_maps_are_automorphisms(n):
    rng = random.Random(n)
    g = build_graph(n)
    squares = sorted(unit_squares(n))
    for _ in range(100):
        assert affine_automorphism_check(g, rng.choice(squares), rng.randrange(n))


def test_nonsquare_multiplier_is_not_an_automorphism(g13):
    # x -> 2x swaps squares and non-squares; check it by hand with the raw rows
    image = [sum(1 << (2 * v % 13) for v in g13.neighbors(u)) for u in range(13)]
    assert image[0] != g13.adj[0]


@pytest.mark.parametrize("p, alpha, blocks, intra, inter", [
    (5, 1, 1, 5, 0),
    (5, 2, 5, 25, 100),
    (5, 3, 25, 125, 3000),
    (13, 1, 1, 39, 0),
    (13, 2, 13, 507, 6084),
    (17, 1, 1, 68, 0),
    (29, 1, 1, 203, 0),
])
def test_decomposition_report(p, alpha, blocks, intra, inter):
    report = decomposition_report(p, alpha)
    assert report.block_count == blocks
    assert report.intra_block_edges == intra
    assert report.inter_block_edges == inter
    assert report.blocks_isomorphic
    assert report.star_structure_verified
    assert report.passed
    assert report.edge_count == build_graph(p ** alpha).edge_count
