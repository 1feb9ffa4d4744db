"""Graphs (1-skeleta) of revlex-initial polytopes.

Two vertices in the same block are adjacent iff they differ in one free
coordinate.  Across blocks p < q, a vertex x of block q sees the patch

    A_pq(x) = { z in block p : z_i = x_i (i < s_q), z_{s_q} = 0, z_{s_r} = 1 (p < r < q) }

and the patch B_pq(x) (same, with z_{s_q} = 1) unless the highest coordinate
below s_q where x differs from v is a one-position of v.  There are no other
edges.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

import numpy as np

from .core import PointLike
from .errors import CapacityError
from .polytope import RevlexPolytope, block_of

DEFAULT_VERTEX_CAP = 1 << 20


@dataclass(frozen=True)
class NeighborPatch:
    """A_pq(x) and B_pq(x) for one base vertex (blocks numbered from 1)."""

    p: int
    q: int
    base: int
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]

    @property
    def delta(self) -> int:
        return len(self.a_set).bit_length() - 1


@dataclass
class PolytopeGraph:
    n: int
    edges: np.ndarray  # (m, 2) int64, u < v, lexicographically sorted
    _adj: list | None = field(default=None, repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "PolytopeGraph":
        arr = np.array([(min(u, v), max(u, v)) for u, v in pairs], dtype=np.int64).reshape(-1, 2)
        return cls(n, _sort_unique(arr, n))

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    @property
    def adjacency(self) -> list[list[int]]:
        if self._adj is None:
            adj = [[] for _ in range(self.n)]
            for u, v in self.edges.tolist():
                adj[u].append(v)
                adj[v].append(u)
            for lst in adj:
                lst.sort()
            self._adj = adj
        return self._adj

    def neighbors_of(self, x: int) -> list[int]:
        return self.adjacency[x]

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    def edge_set(self) -> set[tuple[int, int]]:
        return set(map(tuple, self.edges.tolist()))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolytopeGraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    def to_edgelist(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges.tolist())

    def to_dot(self, name: str | None = None) -> str:
        lines = [f"graph {name or f'P{self.n}'} {{"]
        lines += [f"  {x};" for x in range(self.n) if not self.adjacency[x]]
        lines += [f"  {u} -- {v};" for u, v in self.edges.tolist()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {"n": self.n, "num_edges": self.num_edges,
                   "adjacency": {str(x): self.adjacency[x] for x in range(self.n)}}
        return json.dumps(payload) + "\n"


def _sort_unique(arr: np.ndarray, n: int) -> np.ndarray:
    if arr.size == 0:
        return np.zeros((0, 2), dtype=np.int64)
    keys = np.unique(arr[:, 0] * n + arr[:, 1])
    return np.stack([keys // n, keys % n], axis=1)


def _subset_offsets(positions: list[int]) -> np.ndarray:
    offs = np.zeros(1, dtype=np.int64)
    for i in positions:
        offs = np.concatenate([offs, offs + (1 << i)])
    return offs


def _b_condition(P: RevlexPolytope, q_idx: int, low):
    """Part (1b) test for block q (0-based) on low parts of base vertices.

    Works on an int or a numpy array of ints; True where B-edges exist.
    """
    s_q = P.signature[q_idx]
    diff = low ^ (P.n & ((1 << s_q) - 1))
    bad = diff < 0 if isinstance(diff, np.ndarray) else False
    for s_r in P.signature[q_idx + 1:]:
        bad = bad | ((diff >> s_r) == 1)
    return ~bad if isinstance(bad, np.ndarray) else not bad


def _patch_prefix(P: RevlexPolytope, p_idx: int, q_idx: int) -> tuple[int, list[int]]:
    """Fixed high part and free positions shared by A_pq(x) and B_pq(x)."""
    sig, blocks = P.signature, P.blocks
    prefix = blocks[p_idx].start + sum(1 << sig[r] for r in range(p_idx + 1, q_idx))
    free = [i for i in range(sig[q_idx] + 1, sig[p_idx]) if not (P.n >> i) & 1]
    return prefix, free


def neighbor_patch(P: RevlexPolytope, p: int, q: int, x: Union[int, PointLike]) -> NeighborPatch:
    x = P.vertex_index(x)
    prefix, free = _patch_prefix(P, p - 1, q - 1)
    low = x & ((1 << P.signature[q - 1]) - 1)
    offs = _subset_offsets(free).tolist()
    a = tuple(sorted(prefix + low + o for o in offs))
    b = tuple(sorted(prefix + (1 << P.signature[q - 1]) + low + o for o in offs))
    return NeighborPatch(p, q, x, a, b)


def neighbors(P: RevlexPolytope, x: Union[int, PointLike]) -> list[int]:
    """Ascending neighbor list of one vertex, computed without the full graph."""
    x = P.vertex_index(x)
    sig, blocks = P.signature, P.blocks
    q = block_of(P, x) - 1
    s_q = sig[q]
    out = {x ^ (1 << i) for i in range(s_q)}
    # x as the deeper endpoint
    for p in range(q):
        patch = neighbor_patch(P, p + 1, q + 1, x)
        out.update(patch.a_set)
        if _b_condition(P, q, x & ((1 << s_q) - 1)):
            out.update(patch.b_set)
    # x inside a patch of some deeper base vertex y
    for q2 in range(q + 1, len(sig)):
        if any(not (x >> sig[r]) & 1 for r in range(q + 1, q2)):
            continue
        low = x & ((1 << sig[q2]) - 1)
        y = blocks[q2].start + low
        if not (x >> sig[q2]) & 1 or _b_condition(P, q2, low):
            out.add(y)
    return sorted(out)


def _edge_chunks(P: RevlexPolytope):
    blocks = P.blocks
    for q_idx, bq in enumerate(blocks):
        s_q = bq.cube_dim
        low = np.arange(1 << s_q, dtype=np.int64)
        for i in range(s_q):
            u = bq.start + low[((low >> i) & 1) == 0]
            yield u, u + (1 << i)
        if q_idx == 0:
            continue
        b_low = low[_b_condition(P, q_idx, low)]
        for p_idx in range(q_idx):
            prefix, free = _patch_prefix(P, p_idx, q_idx)
            offs = _subset_offsets(free)
            k = offs.size
            z = prefix + low[:, None] + offs[None, :]
            yield z.ravel(), np.repeat(bq.start + low, k)
            z = prefix + (1 << s_q) + b_low[:, None] + offs[None, :]
            yield z.ravel(), np.repeat(bq.start + b_low, k)


def build_graph(P: RevlexPolytope, vertex_cap: int = DEFAULT_VERTEX_CAP) -> PolytopeGraph:
    if P.n > vertex_cap:
        raise CapacityError(f"P({P.n}) exceeds the graph vertex cap {vertex_cap}; "
                            "use edge_count_formula instead")
    chunks = [np.stack([u, v], axis=1) for u, v in _edge_chunks(P) if u.size]
    arr = np.concatenate(chunks) if chunks else np.zeros((0, 2), dtype=np.int64)
    return PolytopeGraph(P.n, _sort_unique(arr, P.n))


def edge_count_formula(P: RevlexPolytope) -> int:
    """Closed-form edge count; blocks p < q numbered from 1."""
    sig = P.signature
    w = len(sig)
    total = sum(s * (1 << s) // 2 for s in sig)
    tail = [0] * (w + 1)  # tail[k] = sum_{r >= k} 2^{s_r}, 0-based
    for k in range(w - 1, -1, -1):
        tail[k] = tail[k + 1] + (1 << sig[k])
    for p in range(w):
        for q in range(p + 1, w):
            delta = (p + sig[p]) - (q + sig[q])
            total += 2 * (1 << (p + sig[p] - q)) - tail[q + 1] * (1 << delta)
    return total


def average_degree(P: RevlexPolytope) -> Fraction:
    return Fraction(2 * edge_count_formula(P), P.n)
