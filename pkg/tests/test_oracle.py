from fractions import Fraction
from itertools import product

import pytest

from revlex import oracle
from revlex.errors import CapacityError, InvalidInequalityError
from revlex.facets import LinearInequality, full_description, full_support, lower_bound, upper_bound
from revlex.graph import build_graph
from revlex.polytope import make_polytope


def as_points(n, d):
    return {tuple(Fraction((x >> i) & 1) for i in range(d)) for x in range(n)}


def test_int_rank_and_det():
    assert oracle.int_rank([[1, 2], [2, 4]]) == 1
    assert oracle.int_rank([[0, 0], [0, 0]]) == 0
    assert oracle.int_det([[2, 1], [1, 3]]) == 5
    assert oracle.int_det([[0, 1, 0], [1, 0, 0], [0, 0, 1]]) == -1
    assert oracle.RationalMatrix([[Fraction(1, 2), 1], [1, 2]]).rank() == 1


def test_affine_rank():
    assert oracle.affine_rank([0, 1, 2], 3) == 2
    assert oracle.affine_rank([3, 5, 6], 3) == 2
    assert oracle.affine_rank([0], 3) == 0


def test_brute_max():
    P = make_polytope(7)
    assert oracle.brute_max(P, [1, -1, 2]) == 3
    assert oracle.brute_max(P, [0, 0, 0]) == 0
    assert oracle.brute_max(make_polytope(1, 2), [4, 4]) == 0
    assert oracle.brute_max(P, [Fraction(1, 3), Fraction(1, 2), -1]) == Fraction(5, 6)


def test_h_vertex_enumeration():
    assert oracle.h_vertex_enumeration(full_description(make_polytope(7)), 3) == as_points(7, 3)
    assert oracle.h_vertex_enumeration(full_description(make_polytope(6)), 3) == as_points(6, 3)
    box = [lower_bound(i, 3) for i in range(3)] + [upper_bound(i, 3) for i in range(3)]
    assert oracle.h_vertex_enumeration(box, 3) == as_points(8, 3)


def test_h_vertex_enumeration_non_integral():
    # x_0 + x_1 <= 1/1 with 2x_0 <= 1 has the vertex (1/2, 1/2)
    rows = [lower_bound(0, 2), lower_bound(1, 2),
            LinearInequality((2, 0), 1, "custom", 0), LinearInequality((1, 1), 1, "custom", 1)]
    pts = oracle.h_vertex_enumeration(rows, 2)
    assert (Fraction(1, 2), Fraction(1, 2)) in pts and len(pts) == 4


def test_is_facet_by_rank():
    P7, P6 = make_polytope(7), make_polytope(6)
    assert oracle.is_facet_by_rank(P7, full_support(P7))
    assert not oracle.is_facet_by_rank(P6, upper_bound(2, 3))
    for n in (5, 6, 7, 8, 13):
        P = make_polytope(n)
        assert all(oracle.is_facet_by_rank(P, lower_bound(i, P.d)) for i in range(P.d))


def test_is_facet_rejects_invalid():
    with pytest.raises(InvalidInequalityError):
        oracle.is_facet_by_rank(make_polytope(7), LinearInequality((1, 1, 1), 1, "custom", 0))


def test_smallest_face_adjacent():
    P = make_polytope(7)
    assert oracle.smallest_face_adjacent(P, 3, 5)
    assert not oracle.smallest_face_adjacent(P, 0, 3)
    assert oracle.smallest_face_adjacent(make_polytope(2), 0, 1)
    for x, y in product(range(7), repeat=2):
        if x != y:
            assert oracle.smallest_face_adjacent(P, x, y) == oracle.smallest_face_adjacent(P, y, x)


def test_brute_expansion_examples():
    val, S = oracle.brute_expansion(build_graph(make_polytope(3)))
    assert val == 2 and len(S) == 1
    val, S = oracle.brute_expansion(build_graph(make_polytope(8)))
    assert val == 1 and len(S) == 4
    assert oracle.brute_expansion(build_graph(make_polytope(2)))[0] == 1


def naive_expansion(G):
    n = G.n
    best = None
    for mask in range(1, 1 << n):
        size = bin(mask).count("1")
        if size > n // 2:
            continue
        cut = sum(1 for u, v in G.edges.tolist() if (mask >> u & 1) != (mask >> v & 1))
        r = Fraction(cut, size)
        best = r if best is None else min(best, r)
    return best


@pytest.mark.parametrize("n", range(2, 13))
def test_brute_expansion_matches_naive(n):
    G = build_graph(make_polytope(n))
    val, S = oracle.brute_expansion(G)
    assert val == naive_expansion(G)
    cut = sum(1 for u, v in G.edges.tolist() if (u in S) != (v in S))
    assert Fraction(cut, len(S)) == val and len(S) <= n // 2


def test_brute_expansion_cap():
    with pytest.raises(CapacityError):
        oracle.brute_expansion(build_graph(make_polytope(oracle.EXPANSION_CAP + 1)))


def test_brute_facets_square_pyramid():
    pts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)]
    assert len(oracle.brute_facets(pts)) == 5
    assert oracle.affine_rank_points(pts) == 3
    assert oracle.brute_point_graph(pts).num_edges == 8
