"""Brute-force ground truth, exact arithmetic only.

Nothing here uses the block structure or the closed formulas of the other
modules; the checks go through explicit vertex lists, integer elimination and
subset enumeration.  ``full_description`` is the only import from the theory
side, and it is itself validated by :func:`h_vertex_enumeration`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from .errors import CapacityError, InvalidInequalityError, NotFullDimensionalError, OutOfRangeError
from .facets import LinearInequality, full_description
from .graph import PolytopeGraph
from .polytope import RevlexPolytope

BRUTE_MAX_CAP = 1 << 20
HVERTEX_MAX_DIM = 6
FACET_TEST_CAP = 1 << 16
FACE_ADJ_CAP = 1 << 14
EXPANSION_CAP = 22


# ---------------------------------------------------------------- linear algebra

def int_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in rows]
    if not M:
        return 0
    m, ncols = len(M), len(M[0])
    rank, prev = 0, 1
    for col in range(ncols):
        piv = next((r for r in range(rank, m) if M[r][col] != 0), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        pr = M[rank]
        for r in range(rank + 1, m):
            row = M[r]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (row[c] * pr[col] - f * pr[c]) // prev
            row[col] = 0
        prev = pr[col]
        rank += 1
        if rank == m:
            break
    return rank


def int_det(rows: Sequence[Sequence[int]]) -> int:
    M = [list(r) for r in rows]
    k = len(M)
    sign, prev = 1, 1
    for col in range(k):
        piv = next((r for r in range(col, k) if M[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            sign = -sign
        for r in range(col + 1, k):
            for c in range(col + 1, k):
                M[r][c] = (M[r][c] * M[col][col] - M[r][col] * M[col][c]) // prev
            M[r][col] = 0
        prev = M[col][col]
    return sign * M[k - 1][k - 1] if k else 1


class RationalMatrix:
    """Exact rational matrix; rank clears denominators row by row."""

    def __init__(self, rows: Iterable[Sequence]):
        self.rows = [[Fraction(a) for a in r] for r in rows]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), (len(self.rows[0]) if self.rows else 0)

    def integer_rows(self) -> list[list[int]]:
        out = []
        for r in self.rows:
            den = lcm(*(a.denominator for a in r)) if r else 1
            out.append([int(a * den) for a in r])
        return out

    def rank(self) -> int:
        return int_rank(self.integer_rows())


def affine_rank(points: Sequence[int], d: int) -> int:
    """Affine dimension of a set of 0/1 points given as knapsack numbers."""
    if not points:
        return -1
    p0 = points[0]
    diffs = [[((p >> i) & 1) - ((p0 >> i) & 1) for i in range(d)] for p in points[1:]]
    return int_rank(diffs)


# ---------------------------------------------------------------- optimization

def _vertex_matrix(n: int, d: int) -> np.ndarray:
    x = np.arange(n, dtype=np.int64)
    return ((x[:, None] >> np.arange(d, dtype=np.int64)[None, :]) & 1).astype(np.int64)


def _scaled(c: Sequence) -> tuple[list[int], int]:
    c = [Fraction(ci) for ci in c]
    den = lcm(*(ci.denominator for ci in c)) if c else 1
    return [int(ci * den) for ci in c], den


def brute_max_many(P: RevlexPolytope, cs: Sequence[Sequence]) -> list[Fraction]:
    """max c^T x over the explicit vertex list, for several objectives at once."""
    if P.n > BRUTE_MAX_CAP:
        raise CapacityError(f"n={P.n} exceeds brute_max cap {BRUTE_MAX_CAP}")
    for c in cs:
        if len(c) != P.d:
            raise OutOfRangeError(f"objective has length {len(c)}, expected {P.d}")
    scaled = [_scaled(c) for c in cs]
    if not scaled:
        return []
    X = _vertex_matrix(P.n, P.d)
    big = max((abs(a) for ci, _ in scaled for a in ci), default=0)
    if big * max(P.d, 1) < (1 << 62):
        C = np.array([ci for ci, _ in scaled], dtype=np.int64).reshape(len(scaled), P.d)
        best = (X @ C.T).max(axis=0).tolist()
    else:
        C = np.array([ci for ci, _ in scaled], dtype=object).reshape(len(scaled), P.d)
        best = (X.astype(object) @ C.T).max(axis=0).tolist()
    return [Fraction(int(b), den) for b, (_, den) in zip(best, scaled)]


def brute_max(P: RevlexPolytope, c: Sequence) -> Fraction:
    return brute_max_many(P, [c])[0]


# ---------------------------------------------------------------- vertex enumeration

def _reduce(state, new, d):
    """Add ``new`` (int row, rhs last) to a fully reduced integer echelon form.

    Returns the new state, or None if the coefficient part becomes dependent.
    """
    new = list(new)
    for pc, row in state:
        f = new[pc]
        if f:
            g = row[pc]
            new = [a * g - b * f for a, b in zip(new, row)]
    pc_new = next((i for i in range(d) if new[i]), None)
    if pc_new is None:
        return None
    g = 0
    for a in new:
        g = gcd(g, a)
    new = [a // g for a in new]
    out = []
    for pc, row in state:
        f = row[pc_new]
        if f:
            h = new[pc_new]
            row = [a * h - b * f for a, b in zip(row, new)]
            g = 0
            for a in row:
                g = gcd(g, a)
            row = [a // g for a in row]
        out.append((pc, row))
    out.append((pc_new, new))
    return out


def h_vertex_enumeration(ineqs: Sequence[LinearInequality], d: int) -> set[tuple[Fraction, ...]]:
    """Vertices of {x : A x <= b}: every nonsingular d-subset of rows, solved and filtered.

    Subsets are grown depth-first so that a dependent partial choice prunes all
    of its supersets.
    """
    if d > HVERTEX_MAX_DIM:
        raise CapacityError(f"vertex enumeration is limited to d <= {HVERTEX_MAX_DIM}")
    rows = [list(r.coeffs) + [r.rhs] for r in ineqs]
    for r in rows:
        if len(r) != d + 1:
            raise OutOfRangeError("inequality length does not match d")
    m = len(rows)
    found: set[tuple[int, ...]] = set()

    def leaf(state):
        dens = [row[pc] for pc, row in state]
        D = lcm(*(abs(x) for x in dens))
        num = [0] * d
        for pc, row in state:
            num[pc] = row[d] * (D // row[pc])
        for r in rows:
            if sum(a * x for a, x in zip(r, num) if a) > r[d] * D:
                return
        g = D
        for x in num:
            g = gcd(g, x)
        found.add(tuple(x // g for x in num) + (D // g,))

    def dfs(start, state):
        if len(state) == d:
            leaf(state)
            return
        for i in range(start, m - (d - len(state)) + 1):
            nxt = _reduce(state, rows[i], d)
            if nxt is not None:
                dfs(i + 1, nxt)

    dfs(0, [])
    return {tuple(Fraction(x, t[-1]) for x in t[:-1]) for t in found}


# ---------------------------------------------------------------- facets

def is_facet_by_rank(P: RevlexPolytope, ineq: LinearInequality) -> bool:
    """True iff ``ineq`` is valid and its tight vertices span a (d-1)-flat.

    Raises InvalidInequalityError when some vertex violates it.
    """
    if not P.is_full_dimensional:
        raise NotFullDimensionalError("facetness test needs a full-dimensional polytope")
    if P.n > FACET_TEST_CAP:
        raise CapacityError(f"n={P.n} exceeds the facet test cap {FACET_TEST_CAP}")
    tight = []
    for x in range(P.n):
        lhs = ineq.lhs(x)
        if lhs > ineq.rhs:
            raise InvalidInequalityError(f"{ineq.tag} is violated at vertex {x}")
        if lhs == ineq.rhs:
            tight.append(x)
    return affine_rank(tight, P.d) == P.d - 1


# ---------------------------------------------------------------- adjacency

def _tight_masks(rows: Sequence[LinearInequality], points: Sequence[int]) -> list[int]:
    masks = []
    for r in rows:
        m = 0
        for k, x in enumerate(points):
            if r.is_tight(x):
                m |= 1 << k
        masks.append(m)
    return masks


def _face_adjacent(masks: Sequence[int], full: int, a: int, b: int) -> bool:
    pair = (1 << a) | (1 << b)
    face = full
    for m in masks:
        if m & pair == pair:
            face &= m
    return face == pair


def smallest_face_adjacent(P: RevlexPolytope, x, y) -> bool:
    """Adjacency via the smallest face of the verified H-description containing x and y."""
    if P.n > FACE_ADJ_CAP:
        raise CapacityError(f"n={P.n} exceeds the face-adjacency cap {FACE_ADJ_CAP}")
    x, y = P.vertex_index(x), P.vertex_index(y)
    if x == y:
        raise OutOfRangeError("adjacency needs two distinct vertices")
    masks = _tight_masks(full_description(P), range(P.n))
    return _face_adjacent(masks, (1 << P.n) - 1, x, y)


def oracle_graph(P: RevlexPolytope) -> PolytopeGraph:
    if P.n > FACE_ADJ_CAP:
        raise CapacityError(f"n={P.n} exceeds the face-adjacency cap {FACE_ADJ_CAP}")
    masks = _tight_masks(full_description(P), range(P.n))
    full = (1 << P.n) - 1
    edges = [(x, y) for x, y in combinations(range(P.n), 2) if _face_adjacent(masks, full, x, y)]
    return PolytopeGraph.from_edges(P.n, edges)


# ---------------------------------------------------------------- explicit point sets

def _dot(a, p):
    return sum(ai * pi for ai, pi in zip(a, p))


def brute_facets(points: Sequence[Sequence[int]]) -> list[tuple[tuple[int, ...], int]]:
    """Facets (a, b) with a.x <= b of a full-dimensional integer point set.

    Tries the hyperplane through every d-subset of points; small inputs only.
    """
    pts = [tuple(p) for p in points]
    d = len(pts[0])
    if affine_rank_points(pts) != d:
        raise NotFullDimensionalError("point set is not full-dimensional")
    facets = set()
    for combo in combinations(pts, d):
        p0 = combo[0]
        diffs = [[a - b for a, b in zip(p, p0)] for p in combo[1:]]
        normal = []
        for j in range(d):
            minor = [r[:j] + r[j + 1:] for r in diffs]
            normal.append((-1) ** j * int_det(minor))
        if not any(normal):
            continue
        b = _dot(normal, p0)
        vals = [_dot(normal, p) for p in pts]
        if all(v <= b for v in vals):
            pass
        elif all(v >= b for v in vals):
            normal, b = [-a for a in normal], -b
        else:
            continue
        g = 0
        for a in normal + [b]:
            g = gcd(g, a)
        facets.add((tuple(a // g for a in normal), b // g))
    return sorted(facets)


def affine_rank_points(points: Sequence[Sequence[int]]) -> int:
    p0 = points[0]
    return int_rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def brute_point_graph(points: Sequence[Sequence[int]]) -> PolytopeGraph:
    """Graph of conv(points) via facet incidences (all points must be vertices)."""
    pts = [tuple(p) for p in points]
    facets = brute_facets(pts)
    masks = []
    for a, b in facets:
        m = 0
        for k, p in enumerate(pts):
            if _dot(a, p) == b:
                m |= 1 << k
        masks.append(m)
    full = (1 << len(pts)) - 1
    edges = [(i, j) for i, j in combinations(range(len(pts)), 2)
             if _face_adjacent(masks, full, i, j)]
    return PolytopeGraph.from_edges(len(pts), edges)


# ---------------------------------------------------------------- expansion

def brute_expansion(G: PolytopeGraph) -> tuple[Fraction, frozenset]:
    """min |cut(S)| / |S| over 0 < |S| <= n/2, by Gray-code subset enumeration."""
    n = G.n
    if n > EXPANSION_CAP:
        raise CapacityError(f"n={n} exceeds the brute-force expansion cap {EXPANSION_CAP}")
    if n < 2:
        raise OutOfRangeError("edge expansion needs at least two vertices")
    nbr = [0] * n
    for u, v in G.edges.tolist():
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    deg = [m.bit_count() for m in nbr]
    half = n // 2
    S = size = cut = 0
    best_cut, best_size, best_S = None, 1, 0
    for k in range(1, 1 << n):
        u = (k & -k).bit_length() - 1
        bit = 1 << u
        if S & bit:
            S ^= bit
            size -= 1
            cut += 2 * (nbr[u] & S).bit_count() - deg[u]
        else:
            cut += deg[u] - 2 * (nbr[u] & S).bit_count()
            S |= bit
            size += 1
        if 0 < size <= half and (best_cut is None or cut * best_size < best_cut * size):
            best_cut, best_size, best_S = cut, size, S
    witness = frozenset(i for i in range(n) if (best_S >> i) & 1)
    return Fraction(best_cut, best_size), witness
