"""0/1 points, the reverse-lexicographic order and signatures.

A point x in {0,1}^d is identified with the integer sum(x_i * 2**i), so the
reverse-lexicographic order on points is the usual order on integers.  Vertices
are handled as plain ints everywhere in the package; :class:`BitVector01` is the
view used at API boundaries and for text I/O (bit strings list x_0 first).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatchError, OutOfRangeError

MAX_DIM = 62


def check_dim(d: int) -> None:
    if not isinstance(d, int) or d < 1:
        raise OutOfRangeError(f"dimension must be a positive integer, got {d!r}")
    if d > MAX_DIM:
        raise OutOfRangeError(f"dimension {d} exceeds the supported maximum {MAX_DIM}")


@dataclass(frozen=True, order=False)
class BitVector01:
    """A 0/1 point of length ``d`` stored as its knapsack number ``value``."""

    value: int
    d: int

    def __post_init__(self):
        check_dim(self.d)
        if not 0 <= self.value < (1 << self.d):
            raise OutOfRangeError(f"{self.value} does not fit in {self.d} bits")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector01":
        bits = list(bits)
        value = 0
        for i, b in enumerate(bits):
            if b not in (0, 1):
                raise OutOfRangeError(f"entry {i} is {b!r}, expected 0 or 1")
            value |= b << i
        return cls(value, len(bits))

    @classmethod
    def parse(cls, text: str) -> "BitVector01":
        """Parse a bit string such as ``"1011001001"`` (x_0 first)."""
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise OutOfRangeError(f"not a bit string: {text!r}")
        return cls.from_bits(int(c) for c in text)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.d))

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.d:
            raise IndexError(i)
        return (self.value >> i) & 1

    def __len__(self) -> int:
        return self.d

    def __iter__(self):
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join(str(b) for b in self.bits)

    def __xor__(self, other: "BitVector01") -> "BitVector01":
        if other.d != self.d:
            raise DimensionMismatchError(f"lengths {self.d} and {other.d} differ")
        return BitVector01(self.value ^ other.value, self.d)


PointLike = Union[BitVector01, Sequence[int]]


def as_bitvector(x: PointLike) -> BitVector01:
    if isinstance(x, BitVector01):
        return x
    return BitVector01.from_bits(x)


def unit(i: int, d: int) -> BitVector01:
    return BitVector01(1 << i, d)


@dataclass(frozen=True)
class Signature:
    weight: int
    indices: tuple[int, ...]  # strictly decreasing one-positions
    cosignature: tuple[int, ...]  # ascending zero-positions


def rlex_less(x: PointLike, y: PointLike) -> bool:
    """True iff x is reverse-lexicographically smaller than y.

    Decided on the highest differing coordinate, not by comparing numbers.
    """
    x, y = as_bitvector(x), as_bitvector(y)
    if x.d != y.d:
        raise DimensionMismatchError(f"lengths {x.d} and {y.d} differ")
    diff = x.value ^ y.value
    if diff == 0:
        return False
    return (y.value >> (diff.bit_length() - 1)) & 1 == 1


def from_index(n: int, d: int) -> BitVector01:
    check_dim(d)
    if not 0 <= n < (1 << d):
        raise OutOfRangeError(f"index {n} out of range for d={d} (need 0 <= n < 2^d)")
    return BitVector01(n, d)


def to_index(x: PointLike) -> int:
    return as_bitvector(x).value


def one_positions(n: int) -> tuple[int, ...]:
    """Positions of the one bits of ``n``, decreasing."""
    out = []
    while n:
        i = n.bit_length() - 1
        out.append(i)
        n ^= 1 << i
    return tuple(out)


def signature_of(v: PointLike) -> Signature:
    v = as_bitvector(v)
    idx = one_positions(v.value)
    co = tuple(i for i in range(v.d) if not (v.value >> i) & 1)
    return Signature(len(idx), idx, co)
