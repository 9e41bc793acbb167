"""Subsets of ``{0, ..., n-1}`` stored as Python int bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True, order=True)
class PointSet:
    n: int
    bits: int = 0

    @classmethod
    def of(cls, n: int, points: Iterable[int]) -> PointSet:
        bits = 0
        for x in points:
            if not 0 <= x < n:
                raise ValueError(f"point {x} outside [0, {n})")
            bits |= 1 << x
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> PointSet:
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> PointSet:
        return cls(n, 0)

    def __contains__(self, x: int) -> bool:
        return 0 <= x < self.n and (self.bits >> x) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        b = self.bits
        while b:
            low = b & -b
            yield low.bit_length() - 1
            b ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: PointSet) -> None:
        if self.n != other.n:
            raise ValueError(f"point sets over different domains ({self.n} vs {other.n})")

    def __and__(self, other: PointSet) -> PointSet:
        self._check(other)
        return PointSet(self.n, self.bits & other.bits)

    def __or__(self, other: PointSet) -> PointSet:
        self._check(other)
        return PointSet(self.n, self.bits | other.bits)

    def __sub__(self, other: PointSet) -> PointSet:
        self._check(other)
        return PointSet(self.n, self.bits & ~other.bits)

    def complement(self) -> PointSet:
        return PointSet(self.n, ((1 << self.n) - 1) & ~self.bits)

    def issubset(self, other: PointSet) -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def isdisjoint(self, other: PointSet) -> bool:
        self._check(other)
        return self.bits & other.bits == 0

    def to_list(self) -> list[int]:
        return list(self)

    def min(self) -> int:
        if not self.bits:
            raise ValueError("min of empty point set")
        return (self.bits & -self.bits).bit_length() - 1

    def __repr__(self) -> str:
        return f"PointSet({self.n}, {self.to_list()})"
