"""Pyramids over revlex-initial polytopes: P(d, n).

For d+1 <= n <= 2^d let d~ be the least k >= 0 with n - (d - k) <= 2^k and
n~ = n - (d - d~).  P(d, n) is the (d - d~)-fold pyramid over P(n~); it is a
d-dimensional 0/1-polytope with n vertices, at most 3d facets and average
degree at most d + 4.

Vertices of P(d, n) are numbered 0..n~-1 for the base (as in P(n~)) followed by
the apexes n~, ..., n-1.  Each apex is adjacent to every other vertex.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import AdmissibilityError
from .expansion import (
    ExpansionCertificate,
    FlowAssignment,
    build_mcf,
    certificate_from_phi,
    phi_max_recursive,
)
from .facets import facet_count
from .graph import PolytopeGraph, build_graph, edge_count_formula
from .polytope import RevlexPolytope, make_polytope

SWEEP_HEADER = [
    "n", "dim", "d_tilde", "n_tilde", "num_facets", "num_edges",
    "avg_degree_num", "avg_degree_den", "expansion_lb_num", "expansion_lb_den",
]


def check_admissible(d: int, n: int) -> None:
    if not isinstance(d, int) or d < 1:
        raise AdmissibilityError(f"d must be a positive integer, got {d!r}")
    if not d + 1 <= n <= 1 << d:
        raise AdmissibilityError(f"(d, n) = ({d}, {n}) is not admissible: need {d + 1} <= n <= {1 << d}")


def pyramid_params(d: int, n: int) -> tuple[int, int]:
    check_admissible(d, n)
    k = 0
    while n - (d - k) > 1 << k:
        k += 1
    return k, n - (d - k)


@dataclass(frozen=True)
class PyramidPolytope:
    d: int
    n: int
    d_tilde: int
    n_tilde: int

    @property
    def apex_count(self) -> int:
        return self.d - self.d_tilde

    @property
    def base(self) -> RevlexPolytope | None:
        """P(n~) in its minimal ambient dimension; None for a point base."""
        return make_polytope(self.n_tilde) if self.d_tilde else None

    def points(self) -> list[tuple[int, ...]]:
        """A 0/1 realization: base in the first d~ coordinates, apex j at u_{d~+j-1}."""
        out = [tuple((x >> i) & 1 for i in range(self.d_tilde)) + (0,) * self.apex_count
               for x in range(self.n_tilde)]
        for j in range(self.apex_count):
            p = [0] * self.d
            p[self.d_tilde + j] = 1
            out.append(tuple(p))
        return out


def make_pyramid(d: int, n: int) -> PyramidPolytope:
    dt, nt = pyramid_params(d, n)
    return PyramidPolytope(d, n, dt, nt)


def pyramid_facet_count(d: int, n: int) -> int:
    Q = make_pyramid(d, n)
    if Q.d_tilde == 0:
        return d + 1
    return facet_count(Q.base) + Q.apex_count


def pyramid_edge_count(d: int, n: int) -> int:
    Q = make_pyramid(d, n)
    base_edges = edge_count_formula(Q.base) if Q.d_tilde else 0
    return base_edges + sum(Q.n_tilde + i for i in range(Q.apex_count))


def pyramid_average_degree(d: int, n: int) -> Fraction:
    return Fraction(2 * pyramid_edge_count(d, n), n)


def pyramid_graph(d: int, n: int) -> PolytopeGraph:
    Q = make_pyramid(d, n)
    pairs = []
    if Q.n_tilde >= 2:
        pairs += build_graph(Q.base).edges.tolist()
    pairs += [(z, a) for a in range(Q.n_tilde, n) for z in range(a)]
    return PolytopeGraph.from_edges(n, pairs)


def pyramid_flow(d: int, n: int) -> FlowAssignment:
    """Base pairs use the base flow; every pair with an apex uses its own arc."""
    Q = make_pyramid(d, n)
    arcs = dict(build_mcf(Q.n_tilde).arc_flow) if Q.n_tilde >= 2 else {}
    for a in range(Q.n_tilde, n):
        for z in range(a):
            arcs[(a, z)] = Fraction(1)
            arcs[(z, a)] = Fraction(1)
    return FlowAssignment(n, arcs)


def _pyramid_phi(Q: PyramidPolytope) -> Fraction:
    phi = phi_max_recursive(Q.n_tilde)
    return max(phi, Fraction(1)) if Q.apex_count else phi


def pyramid_expansion_certificate(d: int, n: int, materialize: bool = True) -> ExpansionCertificate:
    """n / (2 phi_max) for the extended flow.

    With ``materialize`` the flow is built arc by arc and measured; otherwise
    phi_max comes from the scalar multiplier recursion.
    """
    Q = make_pyramid(d, n)
    phi = pyramid_flow(d, n).phi_max if materialize else _pyramid_phi(Q)
    return certificate_from_phi(n, phi)


def sweep_rows(d: int, materialize_max: int = 512) -> Iterator[list[int]]:
    """One row per admissible n, in increasing n."""
    for n in range(d + 1, (1 << d) + 1):
        Q = make_pyramid(d, n)
        facets = pyramid_facet_count(d, n)
        edges = pyramid_edge_count(d, n)
        avg = Fraction(2 * edges, n)
        cert = pyramid_expansion_certificate(d, n, materialize=n <= materialize_max)
        yield [n, d, Q.d_tilde, Q.n_tilde, facets, edges, avg.numerator, avg.denominator,
               cert.lower_bound.numerator, cert.lower_bound.denominator]


def write_sweep(d: int, stream, materialize_max: int = 512) -> int:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(SWEEP_HEADER)
    count = 0
    for row in sweep_rows(d, materialize_max):
        w.writerow(row)
        count += 1
    return count


def sweep_csv(d: int, materialize_max: int = 512) -> str:
    buf = io.StringIO()
    write_sweep(d, buf, materialize_max)
    return buf.getvalue()
