"""Oracle-equivalence checks behind ``revlex verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

import numpy as np

from . import oracle
from .bounds import pyramid_average_degree, pyramid_expansion_certificate, pyramid_facet_count
from .core import from_index, rlex_less, to_index
from .expansion import (
    audit_pair_flows,
    build_mcf,
    certify_expansion,
    half_embedding_is_isomorphism,
    partial_prism_map_ok,
    phi_max_recursive,
)
from .facets import facet_count, full_description, minimal_description
from .graph import build_graph, edge_count_formula
from .polytope import make_polytope, maximize


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}: {self.detail}"


def full_dim_counts(d: int) -> range:
    """n with 2^{d-1} < n <= 2^d."""
    return range((1 << (d - 1)) + 1, (1 << d) + 1)


def _fail(name, msg):
    return CheckResult(name, False, msg)


def check_order(max_d: int) -> CheckResult:
    name = "rlex order <-> integer order"
    for d in range(1, min(max_d, 8) + 1):
        for a in range(1 << d):
            x = from_index(a, d)
            if to_index(x) != a:
                return _fail(name, f"round trip failed at {a}, d={d}")
            for b in range(1 << d):
                if rlex_less(x, from_index(b, d)) != (a < b):
                    return _fail(name, f"d={d}: {a} vs {b}")
    return CheckResult(name, True, f"exhaustive for d <= {min(max_d, 8)}")


def check_membership(max_d: int) -> CheckResult:
    name = "0/1 solutions of the full system are exactly X(v)"
    top = min(max_d, 10)
    for d in range(1, top + 1):
        pts = ((np.arange(1 << d)[:, None] >> np.arange(d)[None, :]) & 1)
        for n in range(1, (1 << d) + 1):
            rows = full_description(make_polytope(n, d))
            A = np.array([r.coeffs for r in rows], dtype=np.int64)
            b = np.array([r.rhs for r in rows], dtype=np.int64)
            feasible = np.all(pts @ A.T <= b, axis=1)
            if not np.array_equal(np.flatnonzero(feasible), np.arange(n)):
                return _fail(name, f"d={d}, n={n}")
    return CheckResult(name, True, f"exhaustive for d <= {top}")


def check_facets_oracle(max_d: int) -> CheckResult:
    name = "minimal description = rank-facets, vertex enumeration = X(v)"
    top = min(max_d, oracle.HVERTEX_MAX_DIM)
    count = 0
    for d in range(2, top + 1):
        for n in full_dim_counts(d):
            P = make_polytope(n)
            rows = full_description(P)
            expected = {tuple(Fraction((x >> i) & 1) for i in range(d)) for x in range(n)}
            if oracle.h_vertex_enumeration(rows, d) != expected:
                return _fail(name, f"vertex enumeration differs for n={n}")
            facets = [r for r in rows if oracle.is_facet_by_rank(P, r)]
            if facets != minimal_description(P) or len(facets) != facet_count(P):
                return _fail(name, f"facets differ for n={n}")
            count += 1
    return CheckResult(name, True, f"{count} full-dimensional polytopes, d <= {top}")


def check_facet_bounds(max_d: int) -> CheckResult:
    name = "2d-1 <= facets <= 3d-2 with the stated extremal cases"
    for d in range(3, max_d + 1):
        n_max = (1 << (d - 1)) + (1 << (d - 2)) + 1
        for n in full_dim_counts(d):
            P = make_polytope(n)
            f = facet_count(P)
            if not 2 * d - 1 <= f <= 3 * d - 2:
                return _fail(name, f"n={n}: {f}")
            if (f == 2 * d - 1) != (P.weight == 2 and not P.is_cube):
                return _fail(name, f"minimum case mismatch at n={n}")
            if (f == 3 * d - 2) != (n == n_max):
                return _fail(name, f"maximum case mismatch at n={n}")
    return CheckResult(name, True, f"exhaustive for 3 <= d <= {max_d}")


def check_graph_oracle(max_n: int) -> CheckResult:
    name = "graph = smallest-face oracle graph"
    for n in range(1, max_n + 1):
        P = make_polytope(n)
        if build_graph(P) != oracle.oracle_graph(P):
            return _fail(name, f"n={n}")
    return CheckResult(name, True, f"all n <= {max_n}")


def check_edge_formula(max_n: int) -> CheckResult:
    name = "edge formula = |E|, average degree <= dim + 4"
    for n in range(1, max_n + 1):
        P = make_polytope(n)
        m = build_graph(P).num_edges
        if m != edge_count_formula(P):
            return _fail(name, f"n={n}: formula {edge_count_formula(P)}, graph {m}")
        if Fraction(2 * m, n) > P.dim + 4:
            return _fail(name, f"n={n}: average degree {Fraction(2 * m, n)}")
    return CheckResult(name, True, f"all n <= {max_n}")


def random_objective(rng: random.Random, d: int) -> list[Fraction]:
    return [Fraction(rng.randint(-100, 100), rng.randint(1, 10)) for _ in range(d)]


def check_maximize(max_n: int, per_n: int = 20, seed: int = 0) -> CheckResult:
    name = "maximize = brute-force maximum"
    rng = random.Random(seed)
    for n in range(1, max_n + 1):
        P = make_polytope(n)
        cs = [random_objective(rng, P.d) for _ in range(per_n)]
        for c, want in zip(cs, oracle.brute_max_many(P, cs)):
            val, arg = maximize(P, c)
            if val != want or not P.contains(arg.value) or sum(ci for i, ci in enumerate(c) if arg[i]) != val:
                return _fail(name, f"n={n}, c={c}")
    return CheckResult(name, True, f"{per_n} random objectives for each n <= {max_n}")


def check_mcf(max_n: int) -> CheckResult:
    name = "flow support in graph, phi_max <= n/2"
    for n in range(2, max_n + 1):
        flow = build_mcf(n)
        if flow.support_violations(build_graph(make_polytope(n))):
            return _fail(name, f"n={n}: arc outside the graph")
        if flow.phi_max > Fraction(n, 2) or flow.phi_max != phi_max_recursive(n):
            return _fail(name, f"n={n}: phi_max {flow.phi_max}")
    return CheckResult(name, True, f"2 <= n <= {max_n}")


def check_audit(max_n: int) -> CheckResult:
    name = "per-pair flow audit"
    for n in range(2, max_n + 1):
        try:
            audit_pair_flows(n)
        except AssertionError as exc:
            return _fail(name, f"n={n}: {exc}")
    return CheckResult(name, True, f"2 <= n <= {max_n}")


def check_brute_expansion(max_n: int) -> CheckResult:
    name = "exact expansion >= certificate >= 1"
    for n in range(2, max_n + 1):
        exact, _ = oracle.brute_expansion(build_graph(make_polytope(n)))
        bound = certify_expansion(n).lower_bound
        if not exact >= bound >= 1:
            return _fail(name, f"n={n}: exact {exact}, bound {bound}")
    return CheckResult(name, True, f"2 <= n <= {max_n}")


def check_structure(max_n: int) -> CheckResult:
    name = "half faces ~ P(ceil(n/2)), prism maps preserve edges"
    for n in range(2, max_n + 1):
        if not half_embedding_is_isomorphism(n) or not partial_prism_map_ok(n):
            return _fail(name, f"n={n}")
    return CheckResult(name, True, f"2 <= n <= {max_n}")


def log2_bound_holds(facets: int, d: int, n: int, slack: int = 0) -> bool:
    """facets <= d + 2 log2(n) + slack, decided exactly as 2^(f-d-slack) <= n^2."""
    e = facets - d - slack
    return e <= 0 or (1 << e) <= n * n


def check_pyramids(max_d: int, materialize_max: int = 512) -> CheckResult:
    name = "pyramid bounds: facets <= 3d, <= d + 2log2 n, avg degree <= d+4, expansion >= 1"
    for d in range(1, max_d + 1):
        for n in range(d + 1, (1 << d) + 1):
            f = pyramid_facet_count(d, n)
            if f > 3 * d or not log2_bound_holds(f, d, n):
                return _fail(name, f"(d, n) = ({d}, {n}): {f} facets")
            if pyramid_average_degree(d, n) > d + 4:
                return _fail(name, f"(d, n) = ({d}, {n}): average degree")
            cert = pyramid_expansion_certificate(d, n, materialize=n <= materialize_max)
            if cert.lower_bound < 1:
                return _fail(name, f"(d, n) = ({d}, {n}): expansion bound {cert.lower_bound}")
    return CheckResult(name, True, f"all admissible (d, n), d <= {max_d}")


def run_checks(max_d: int, max_n: int | None = None) -> Iterator[CheckResult]:
    cube = 1 << max_d
    graph_n = min(max_n if max_n is not None else 128, cube)
    plan: list[Callable[[], CheckResult]] = [
        lambda: check_order(max_d),
        lambda: check_membership(max_d),
        lambda: check_facets_oracle(max_d),
        lambda: check_facet_bounds(max_d),
        lambda: check_graph_oracle(graph_n),
        lambda: check_edge_formula(min(cube, 1 << 12)),
        lambda: check_maximize(min(cube, 256)),
        lambda: check_mcf(min(cube, 512)),
        lambda: check_audit(min(cube, 64)),
        lambda: check_brute_expansion(min(cube, 18)),
        lambda: check_structure(min(cube, 256)),
        lambda: check_pyramids(max_d),
    ]
    for step in plan:
        yield step()
