"""The revlex-initial polytope P(n) = conv{0, 1, ..., n-1} and its blocks."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence, Union

from .core import (
    BitVector01,
    PointLike,
    Signature,
    as_bitvector,
    check_dim,
    one_positions,
)
from .errors import DimensionMismatchError, EmptyPolytopeError, MembershipError, OutOfRangeError


def dimension_of_count(n: int) -> int:
    """min{ j : n <= 2^j } for n >= 1."""
    if n < 1:
        raise EmptyPolytopeError("a revlex-initial polytope needs n >= 1")
    return (n - 1).bit_length()


@dataclass(frozen=True)
class Block:
    q: int  # 1-based block number
    cube_dim: int  # s_q
    start: int  # smallest vertex number in the block

    @property
    def size(self) -> int:
        return 1 << self.cube_dim

    def vertices(self) -> range:
        """Block q is the integer interval [start, start + 2^{s_q})."""
        return range(self.start, self.start + self.size)

    def fixed_suffix(self, d: int) -> dict[int, int]:
        """Forced coordinates i >= s_q (0 at s_q, the spec's bits above)."""
        return {i: (self.start >> i) & 1 for i in range(self.cube_dim, d)}


@dataclass(frozen=True)
class RevlexPolytope:
    """conv{x in {0,1}^d : sum x_i 2^i <= n - 1}, stored as (n, d).

    ``n`` may equal 2^d, in which case the polytope is the full cube and the
    spec vector ``v`` (the binary form of n) needs d+1 bits.
    """

    n: int
    d: int

    def __post_init__(self):
        check_dim(self.d)
        if self.n < 1:
            raise EmptyPolytopeError("X(v) is empty for v = 0")
        if self.n > (1 << self.d):
            raise OutOfRangeError(f"n={self.n} exceeds 2^d for d={self.d}")

    @cached_property
    def v(self) -> BitVector01:
        return BitVector01(self.n, max(self.d, self.n.bit_length()))

    @cached_property
    def sig(self) -> Signature:
        idx = one_positions(self.n)
        co = tuple(i for i in range(self.d) if not (self.n >> i) & 1)
        return Signature(len(idx), idx, co)

    @property
    def signature(self) -> tuple[int, ...]:
        return self.sig.indices

    @property
    def weight(self) -> int:
        return self.sig.weight

    @cached_property
    def dim(self) -> int:
        return dimension_of_count(self.n)

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.d

    @property
    def is_cube(self) -> bool:
        return self.n == 1 << self.d

    @cached_property
    def blocks(self) -> tuple[Block, ...]:
        out, start = [], 0
        for q, s in enumerate(self.signature, start=1):
            out.append(Block(q, s, start))
            start += 1 << s
        return tuple(out)

    def vertices(self) -> range:
        return range(self.n)

    def points(self) -> Iterator[BitVector01]:
        for x in range(self.n):
            yield BitVector01(x, self.d)

    def contains(self, x: int) -> bool:
        return 0 <= x < self.n

    def vertex_index(self, x: Union[int, PointLike]) -> int:
        """Normalize a vertex given as int or 0/1 point; raise if not a vertex."""
        if isinstance(x, int):
            idx = x
        else:
            x = as_bitvector(x)
            if x.d != self.d:
                raise DimensionMismatchError(f"point has length {x.d}, polytope d={self.d}")
            idx = x.value
        if not self.contains(idx):
            raise MembershipError(f"{idx} is not a vertex of P({self.n})")
        return idx

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "v": str(self.v),
            "dim": self.dim,
            "signature": list(self.signature),
            "block_dims": [b.cube_dim for b in self.blocks],
        }


def make_polytope(n_or_v: Union[int, PointLike], d: int | None = None) -> RevlexPolytope:
    """Build P(n) from a vertex count or from a spec vector v.

    With an integer the ambient dimension defaults to the minimal one, max(dim, 1).
    A spec vector fixes the ambient dimension to its length.
    """
    if isinstance(n_or_v, int):
        n = n_or_v
        if n < 1:
            raise EmptyPolytopeError("a revlex-initial polytope needs n >= 1")
        if d is None:
            d = max(dimension_of_count(n), 1)
        return RevlexPolytope(n, d)
    v = as_bitvector(n_or_v)
    if d is not None and d != v.d:
        raise DimensionMismatchError(f"v has length {v.d} but d={d} was given")
    if v.value == 0:
        raise EmptyPolytopeError("X(v) is empty for v = 0")
    return RevlexPolytope(v.value, v.d)


def dimension(P: RevlexPolytope) -> int:
    return P.dim


def block_of(P: RevlexPolytope, x: Union[int, PointLike]) -> int:
    """Block number q (1-based) containing vertex x."""
    x = P.vertex_index(x)
    top = (x ^ P.n).bit_length() - 1  # highest differing bit is some s_q
    return P.signature.index(top) + 1


def _as_rationals(c: Sequence, d: int) -> list[Fraction]:
    c = [Fraction(ci) for ci in c]
    if len(c) != d:
        raise DimensionMismatchError(f"objective has length {len(c)}, expected {d}")
    return c


def maximize(P: RevlexPolytope, c: Sequence) -> tuple[Fraction, BitVector01]:
    """Maximize c^T x over P by scanning blocks.

    Block q contributes sum_{p<q} c_{s_p} + sum_{i<s_q} max(c_i, 0).  Ties go to
    the smallest q, and free coordinates with c_i = 0 are set to 0.
    """
    c = _as_rationals(c, P.d)
    pos_prefix = [Fraction(0)]
    for ci in c:
        pos_prefix.append(pos_prefix[-1] + max(ci, 0))

    best, best_block = None, None
    fixed = Fraction(0)
    for block in P.blocks:
        s = block.cube_dim
        val = fixed + pos_prefix[s]
        if best is None or val > best:
            best, best_block = val, block
        if s < P.d:
            fixed += c[s]
    x = best_block.start
    for i in range(best_block.cube_dim):
        if c[i] > 0:
            x |= 1 << i
    return best, BitVector01(x, P.d)
