import json
from fractions import Fraction

import pytest

from revlex import oracle
from revlex.errors import CapacityError, MembershipError
from revlex.graph import (
    PolytopeGraph,
    average_degree,
    build_graph,
    edge_count_formula,
    neighbor_patch,
    neighbors,
)
from revlex.polytope import make_polytope


def test_neighbors_examples():
    P = make_polytope(7)
    assert neighbors(P, 0) == [1, 2, 4]
    assert neighbors(P, 3) == [1, 2, 5, 6]
    assert neighbors(make_polytope(2), 0) == [1]
    with pytest.raises(MembershipError):
        neighbors(P, 7)


def test_patch_sizes_are_powers_of_two():
    P = make_polytope(589)
    for q in range(2, len(P.signature) + 1):
        x = P.blocks[q - 1].start
        for p in range(1, q):
            patch = neighbor_patch(P, p, q, x)
            assert len(patch.a_set) == len(patch.b_set) == 1 << patch.delta


@pytest.mark.parametrize("n,m", [(1, 0), (2, 1), (3, 3), (7, 12), (8, 12), (16, 32)])
def test_edge_counts(n, m):
    P = make_polytope(n)
    assert build_graph(P).num_edges == m == edge_count_formula(P)


def test_cube_is_hypercube():
    G = build_graph(make_polytope(32))
    assert G.edge_set() == {(x, x ^ (1 << i)) for x in range(32) for i in range(5) if not x >> i & 1}


def test_average_degree():
    assert average_degree(make_polytope(7)) == Fraction(24, 7)
    assert average_degree(make_polytope(3)) == 2
    assert average_degree(make_polytope(64)) == 6


def test_neighbors_agree_with_graph():
    for n in range(1, 300):
        P = make_polytope(n)
        adj = build_graph(P).adjacency
        assert all(neighbors(P, x) == adj[x] for x in range(n))


def test_graph_matches_oracle_small():
    for n in range(1, 40):
        P = make_polytope(n)
        assert build_graph(P) == oracle.oracle_graph(P)


def test_formula_large():
    for n in (1000, 1023, 1025, 3000, 4096):
        P = make_polytope(n)
        assert build_graph(P).num_edges == edge_count_formula(P)


def test_average_degree_bound():
    for n in range(1, 2049):
        P = make_polytope(n)
        assert average_degree(P) <= P.dim + 4


def test_vertex_cap():
    with pytest.raises(CapacityError):
        build_graph(make_polytope(100), vertex_cap=50)


def test_serializations():
    G = build_graph(make_polytope(3))
    assert G.to_edgelist() == "0 1\n0 2\n1 2\n"
    assert "0 -- 1;" in G.to_dot()
    data = json.loads(G.to_json())
    assert data["n"] == 3 and data["num_edges"] == 3
    assert data["adjacency"] == {"0": [1, 2], "1": [0, 2], "2": [0, 1]}


def test_from_edges_dedup():
    G = PolytopeGraph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
    assert G.edges.tolist() == [[0, 1], [1, 2]]
    assert G.degree(1) == 2 and G.has_edge(2, 1)
