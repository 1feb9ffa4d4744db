"""Multi-commodity flows certifying edge expansion >= 1 for P(n).

Every ordered pair (x, y) of vertices ships one unit from x to y.  If the sum of
all these flows puts at most phi_max on any arc, every cut S with |S| <= n/2
has |cut(S)| / |S| >= n / (2 phi_max).

The flow for P(n) is built from the flow for P(n') with n' = ceil(n/2):

* n even: P(n) is a prism over the face {x_0 = 0} ~ P(n/2).  Pairs inside a
  half use the half's flow; crossing pairs take the prism arc (x, x^1) first.
* n odd: P(n) is a partial prism; the last vertex xh = n-1 has no copy.  The
  halves are X_A = evens and X_B = odds + {xh}, and crossing pairs are split
  alpha : 1-alpha (alpha = (n-1)/(n+1)) between the prism arc and a detour
  through xh.

Aggregated arc flows are computed from the multipliers of this construction
(``build_mcf``); ``audit_pair_flows`` rebuilds every per-pair flow from the
case table and checks that they add up to the same thing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable

from .errors import CapacityError, OutOfRangeError
from .graph import PolytopeGraph, build_graph
from .polytope import make_polytope

AUDIT_CAP = 64

Arc = tuple[int, int]


class FlowAuditError(AssertionError):
    """A reconstructed flow violated conservation, support or aggregation."""


@dataclass
class FlowAssignment:
    n: int
    arc_flow: dict[Arc, Fraction]

    @property
    def phi_max(self) -> Fraction:
        return max(self.arc_flow.values(), default=Fraction(0))

    def support(self) -> list[Arc]:
        return sorted(a for a, f in self.arc_flow.items() if f > 0)

    def leaving(self, S: Iterable[int]) -> Fraction:
        S = set(S)
        return sum((f for (u, v), f in self.arc_flow.items() if u in S and v not in S),
                   Fraction(0))

    def support_violations(self, G: PolytopeGraph) -> list[Arc]:
        edges = G.edge_set()
        return [(u, v) for (u, v), f in sorted(self.arc_flow.items())
                if f > 0 and (min(u, v), max(u, v)) not in edges]


@dataclass(frozen=True)
class ExpansionCertificate:
    n: int
    phi_max: Fraction
    lower_bound: Fraction
    audited: bool = False


def _half_maps(n: int):
    """(n', alpha or None, map into X_A, map into X_B) for the recursion step."""
    n2 = (n + 1) // 2
    odd = n % 2 == 1
    xh = n - 1

    def to_a(k):
        return 2 * k

    def to_b(k):
        z = 2 * k
        return xh if odd and z == xh else z + 1

    alpha = Fraction(n - 1, n + 1) if odd else None
    return n2, alpha, to_a, to_b


@lru_cache(maxsize=128)
def _aggregate(n: int) -> dict[Arc, Fraction]:
    if n == 1:
        return {}
    n2, alpha, to_a, to_b = _half_maps(n)
    sub = _aggregate(n2)
    if alpha is None:
        scale, cross = Fraction(2), Fraction(n, 2)
    else:
        # each half flow is reused with multiplier 1 + alpha; every prism arc
        # carries alpha for each of the (n-1)/2 partners on the far side
        scale, cross = 1 + alpha, alpha * Fraction(n - 1, 2)
    out: dict[Arc, Fraction] = {}
    for (a, b), f in sub.items():
        out[(to_a(a), to_a(b))] = scale * f
        out[(to_b(a), to_b(b))] = scale * f
    for x in range(0, n - (n % 2), 2):
        out[(x, x + 1)] = cross
        out[(x + 1, x)] = cross
    return out


def build_mcf(n: int) -> FlowAssignment:
    if n < 2:
        raise OutOfRangeError("a multi-commodity flow needs n >= 2")
    return FlowAssignment(n, dict(_aggregate(n)))


@lru_cache(maxsize=None)
def phi_max_recursive(n: int) -> Fraction:
    """phi_max of ``build_mcf(n)`` from the scalar recursion, without arcs."""
    if n == 1:
        return Fraction(0)
    n2, alpha, _, _ = _half_maps(n)
    if alpha is None:
        return max(2 * phi_max_recursive(n2), Fraction(n, 2))
    return max((1 + alpha) * phi_max_recursive(n2), alpha * Fraction(n - 1, 2))


def certificate_from_phi(n: int, phi_max: Fraction, audited: bool = False) -> ExpansionCertificate:
    return ExpansionCertificate(n, phi_max, Fraction(n) / (2 * phi_max), audited)


def certify_expansion(n: int, audit: bool = False) -> ExpansionCertificate:
    if n < 2:
        raise OutOfRangeError("edge expansion needs n >= 2")
    if audit and n > AUDIT_CAP:
        raise CapacityError(f"per-pair audit is limited to n <= {AUDIT_CAP}")
    flow = build_mcf(n)
    if audit:
        audit_pair_flows(n, flow)
    return certificate_from_phi(n, flow.phi_max, audited=audit)


# ---------------------------------------------------------------- per-pair audit

def _add(acc: dict, flow: dict, coef=Fraction(1), arc_map=None):
    for (a, b), f in flow.items():
        key = (arc_map(a), arc_map(b)) if arc_map else (a, b)
        acc[key] = acc.get(key, 0) + coef * f


@lru_cache(maxsize=8)
def pair_flows(n: int) -> dict[Arc, dict[Arc, Fraction]]:
    """phi_(x,y) for every ordered pair x != y, straight from the case table."""
    if n > AUDIT_CAP:
        raise CapacityError(f"per-pair flows are limited to n <= {AUDIT_CAP}")
    if n == 1:
        return {}
    n2, alpha, to_a, to_b = _half_maps(n)
    sub = pair_flows(n2)
    phiA, phiB = {}, {}
    for (s, t), f in sub.items():
        phiA[(to_a(s), to_a(t))] = {(to_a(a), to_a(b)): v for (a, b), v in f.items()}
        phiB[(to_b(s), to_b(t))] = {(to_b(a), to_b(b)): v for (a, b), v in f.items()}
    empty: dict = {}
    xh = n - 1
    in_a = lambda z: z % 2 == 0  # noqa: E731
    in_b = (lambda z: z % 2 == 1 or z == xh) if alpha is not None else (lambda z: z % 2 == 1)

    out = {}
    for x, y in product(range(n), repeat=2):
        if x == y:
            continue
        acc: dict[Arc, Fraction] = {}
        if in_a(x) and in_a(y):
            _add(acc, phiA[(x, y)])
        elif in_b(x) and in_b(y):
            _add(acc, phiB[(x, y)])
        else:
            # crossing pair; x^1 is x's prism partner on the other side
            partner = x ^ 1
            same_side = phiB if in_a(x) else phiA
            coef = Fraction(1) if alpha is None else alpha
            acc[(x, partner)] = coef
            _add(acc, same_side.get((partner, y), empty), coef)
            if alpha is not None:
                own_side = phiA if in_a(x) else phiB
                _add(acc, own_side.get((x, xh), empty), 1 - alpha)
                _add(acc, same_side.get((xh, y), empty), 1 - alpha)
        out[(x, y)] = {a: f for a, f in acc.items() if f != 0}
    return out


def audit_pair_flows(n: int, aggregate: FlowAssignment | None = None,
                     graph: PolytopeGraph | None = None) -> None:
    """Raise FlowAuditError unless every pair flow is a legal unit x->y flow
    on graph arcs and the pair flows sum to the aggregated flow."""
    if n > AUDIT_CAP:
        raise CapacityError(f"per-pair audit is limited to n <= {AUDIT_CAP}")
    graph = graph or build_graph(make_polytope(n))
    aggregate = aggregate or build_mcf(n)
    edges = graph.edge_set()
    total: dict[Arc, Fraction] = {}
    for (x, y), f in pair_flows(n).items():
        net = {}
        for (a, b), val in f.items():
            if val < 0:
                raise FlowAuditError(f"pair {(x, y)}: negative flow on {(a, b)}")
            if (min(a, b), max(a, b)) not in edges:
                raise FlowAuditError(f"pair {(x, y)}: arc {(a, b)} is not a graph edge")
            net[a] = net.get(a, 0) + val
            net[b] = net.get(b, 0) - val
        for z, val in net.items():
            want = 1 if z == x else -1 if z == y else 0
            if val != want:
                raise FlowAuditError(f"pair {(x, y)}: net outflow {val} at {z}, expected {want}")
        if x not in net:
            raise FlowAuditError(f"pair {(x, y)}: ships nothing")
        _add(total, f)
    total = {a: v for a, v in total.items() if v != 0}
    agg = {a: v for a, v in aggregate.arc_flow.items() if v != 0}
    if total != agg:
        diff = sorted(set(total.items()) ^ set(agg.items()))[:3]
        raise FlowAuditError(f"pair flows do not sum to the aggregate flow, e.g. {diff}")


# ---------------------------------------------------------------- structural checks

def half_embedding_is_isomorphism(n: int) -> bool:
    """G[X_A] with x -> x // 2 is exactly G(P(ceil(n/2)))."""
    G = build_graph(make_polytope(n))
    sub = build_graph(make_polytope((n + 1) // 2))
    induced = {(u // 2, v // 2) for u, v in G.edges.tolist() if u % 2 == 0 and v % 2 == 0}
    return induced == sub.edge_set()


def partial_prism_map_ok(n: int) -> bool:
    """For odd n: psi(x) = x^1 (x != n-1), psi(n-1) = n-1 maps edges of G[X_A]
    to edges of G[X_B].  For even n: x -> x^1 is an automorphism swapping halves."""
    G = build_graph(make_polytope(n))
    edges = G.edge_set()
    xh = n - 1

    def psi(z):
        return z if n % 2 == 1 and z == xh else z ^ 1

    for u, v in edges:
        if u % 2 == 0 and v % 2 == 0:
            a, b = sorted((psi(u), psi(v)))
            if (a, b) not in edges:
                return False
        elif n % 2 == 0 and u % 2 == 1 and v % 2 == 1:
            if (u ^ 1, v ^ 1) not in edges:
                return False
    return True
