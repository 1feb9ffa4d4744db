"""Linear descriptions and facets of revlex-initial polytopes.

The complete system consists of

* lower bounds   -x_i <= 0                              for every i,
* upper bounds    x_i <= 1                              for every i,
* cover rows      x_i + sum_{j in Sig(v), j > i} x_j <= |{j in Sig(v): j > i}|
                                                        for every zero position i of v,
* full support    sum_{j in Sig(v)} x_j <= w(v) - 1.

The full cube (n = 2^d) has no cover or full-support rows in ambient d; its
description is the 2d box rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .errors import NotFullDimensionalError
from .polytope import RevlexPolytope

LOWER, UPPER, COVER, FULL = "lower-bound", "upper-bound", "cover", "full-support"


@dataclass(frozen=True)
class LinearInequality:
    coeffs: tuple[int, ...]
    rhs: int
    kind: str
    index: int | None = None  # coordinate for lower/upper/cover rows

    @property
    def tag(self) -> str:
        return self.kind if self.index is None else f"{self.kind}({self.index})"

    def lhs(self, x: int) -> int:
        """Left-hand side at the 0/1 point with knapsack number x."""
        return sum(a for i, a in enumerate(self.coeffs) if a and (x >> i) & 1)

    def holds(self, x: int) -> bool:
        return self.lhs(x) <= self.rhs

    def is_tight(self, x: int) -> bool:
        return self.lhs(x) == self.rhs

    def to_text(self) -> str:
        return " ".join(str(a) for a in self.coeffs) + f" <= {self.rhs}  # {self.tag}"

    def to_json(self) -> dict:
        return {"coeffs": list(self.coeffs), "rhs": self.rhs, "tag": self.tag}


@dataclass(frozen=True)
class FacetClassification:
    D1: frozenset
    D2: frozenset
    epsilon: int

    @property
    def D(self) -> frozenset:
        return self.D1 | self.D2


def lower_bound(i: int, d: int) -> LinearInequality:
    return LinearInequality(tuple(-1 if j == i else 0 for j in range(d)), 0, LOWER, i)


def upper_bound(i: int, d: int) -> LinearInequality:
    return LinearInequality(tuple(1 if j == i else 0 for j in range(d)), 1, UPPER, i)


def cover(P: RevlexPolytope, i: int) -> LinearInequality:
    above = [j for j in P.signature if j > i]
    coeffs = [0] * P.d
    coeffs[i] = 1
    for j in above:
        coeffs[j] = 1
    return LinearInequality(tuple(coeffs), len(above), COVER, i)


def full_support(P: RevlexPolytope) -> LinearInequality:
    return LinearInequality(P.v.bits[: P.d], P.weight - 1, FULL)


def _box(d: int) -> list[LinearInequality]:
    return [lower_bound(i, d) for i in range(d)] + [upper_bound(i, d) for i in range(d)]


def full_description(P: RevlexPolytope) -> list[LinearInequality]:
    rows = _box(P.d)
    if P.is_cube:
        return rows
    rows += [cover(P, i) for i in P.sig.cosignature]
    rows.append(full_support(P))
    return rows


def _require_full_dim(P: RevlexPolytope) -> None:
    if not P.is_full_dimensional:
        raise NotFullDimensionalError(
            f"P({P.n}) has dimension {P.dim} < ambient d={P.d}; project it first"
        )


def classify(P: RevlexPolytope) -> FacetClassification:
    _require_full_dim(P)
    if P.is_cube:
        return FacetClassification(frozenset(), frozenset(), 0)
    sig, d = P.signature, P.d
    w = len(sig)
    D1 = frozenset(sig) if w == 2 else frozenset()
    D2 = frozenset(range(sig[1] + 1, d)) if sig[1] < d - 2 else frozenset()
    if w == 2:
        eps = -1
    elif (P.n >> (d - 2)) & 1:
        eps = 1
    else:
        eps = 0
    return FacetClassification(D1, D2, eps)


def minimal_description(P: RevlexPolytope) -> list[LinearInequality]:
    """The inclusion-minimal subsystem of :func:`full_description`."""
    _require_full_dim(P)
    if P.is_cube:
        return _box(P.d)
    D = classify(P).D
    s_last = P.signature[-1]
    rows = [lower_bound(i, P.d) for i in range(P.d)]
    rows += [upper_bound(i, P.d) for i in range(P.d) if i not in D]
    rows += [cover(P, i) for i in P.sig.cosignature if i > s_last]
    rows.append(full_support(P))
    return rows


def facet_count(P: RevlexPolytope) -> int:
    """2d + #{s_w < i < s_2 : v_i = 0} + epsilon, or 2d for the cube."""
    cls = classify(P)
    if P.is_cube:
        return 2 * P.d
    sig = P.signature
    gaps = sum(1 for i in range(sig[-1] + 1, sig[1]) if not (P.n >> i) & 1)
    return 2 * P.d + gaps + cls.epsilon


def format_text(rows: Iterable[LinearInequality]) -> str:
    return "".join(r.to_text() + "\n" for r in rows)


def format_json(rows: Iterable[LinearInequality]) -> str:
    return json.dumps([r.to_json() for r in rows], indent=2) + "\n"
