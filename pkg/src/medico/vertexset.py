"""Bit-packed vertex sets.

A set over ``0..n-1`` is stored as a Python ``int`` whose bit ``i`` marks
vertex ``i``. Python integers are arbitrary-width arrays of machine words, so
``&``, ``|`` and ``int.bit_count`` run word-parallel. Hot loops in the library
work on raw ints; :class:`VertexSet` is the public, immutable wrapper.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def bits_of(members: Iterable[int]) -> int:
    b = 0
    for v in members:
        b |= 1 << v
    return b


def iter_bits(b: int) -> Iterator[int]:
    """Yield the members of ``b`` in ascending order."""
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


def lowest(b: int) -> int:
    return (b & -b).bit_length() - 1


class VertexSet:
    """Immutable set of vertex ids in ``0..n-1``."""

    __slots__ = ("bits", "n")

    def __init__(self, bits: int = 0, n: int | None = None):
        if bits < 0:
            raise ValueError("negative bitmask")
        if n is None:
            n = bits.bit_length()
        elif bits >> n:
            raise ValueError(f"members outside 0..{n - 1}")
        self.bits = bits
        self.n = n

    @classmethod
    def of(cls, members: Iterable[int], n: int | None = None) -> VertexSet:
        return cls(bits_of(members), n)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and v >= 0 and bool(self.bits >> v & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def _coerce(self, other) -> int:
        if isinstance(other, VertexSet):
            return other.bits
        if isinstance(other, (set, frozenset)):
            return bits_of(other)
        return NotImplemented

    def __and__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else VertexSet(self.bits & b, self.n)

    def __or__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else VertexSet(self.bits | b, max(self.n, b.bit_length()))

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else VertexSet(self.bits & ~b, self.n)

    def __xor__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else VertexSet(self.bits ^ b, max(self.n, b.bit_length()))

    __rand__ = __and__
    __ror__ = __or__

    def issubset(self, other) -> bool:
        b = self._coerce(other)
        return self.bits & ~b == 0

    __le__ = issubset

    def issuperset(self, other) -> bool:
        b = self._coerce(other)
        return b & ~self.bits == 0

    __ge__ = issuperset

    def __lt__(self, other) -> bool:
        return self.issubset(other) and self.bits != self._coerce(other)

    def __gt__(self, other) -> bool:
        return self.issuperset(other) and self.bits != self._coerce(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSet):
            return self.bits == other.bits
        if isinstance(other, (set, frozenset)):
            return all(isinstance(v, int) and v >= 0 for v in other) and self.bits == bits_of(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return f"VertexSet({sorted(self)})"

    def to_list(self) -> list[int]:
        return list(self)
