"""Eventually periodic subsets of the natural numbers.

A value is ``prefix ∪ {k >= t : k mod p in residues}`` with ``prefix ⊆ [0, t)``.
Residues are absolute (``k mod p``), not offsets from ``t``. Every
constructor canonicalizes: ``p`` is the least period of the tail and ``t``
the least threshold from which that period holds, so ``==`` is set equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable


def _least_period(p: int, residues: frozenset[int]) -> int:
    for d in range(1, p + 1):
        if p % d == 0 and all(((r + d) % p in residues) for r in residues):
            return d
    return p


@dataclass(frozen=True)
class EventuallyPeriodicNatSet:
    t: int
    prefix: frozenset[int]
    p: int
    residues: frozenset[int]

    def __init__(self, t: int = 0, prefix: Iterable[int] = (), p: int = 1, residues: Iterable[int] = ()):
        if t < 0 or p < 1:
            raise ValueError("need t >= 0 and p >= 1")
        prefix = frozenset(prefix)
        residues = frozenset(residues)
        if any(not 0 <= k < t for k in prefix):
            raise ValueError("prefix elements must lie in [0, t)")
        if any(not 0 <= r < p for r in residues):
            raise ValueError("residues must lie in [0, p)")
        d = _least_period(p, residues)
        if d != p:
            residues = frozenset(r % d for r in residues)
            p = d
        prefix = set(prefix)
        while t > 0 and ((t - 1) in prefix) == (((t - 1) % p) in residues):
            t -= 1
            prefix.discard(t)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "prefix", frozenset(prefix))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "residues", residues)

    @classmethod
    def from_bits(cls, t: int, p: int, bits: Iterable[int]) -> EventuallyPeriodicNatSet:
        """Build from the membership of ``0 .. t+p-1``; later k repeat with period p."""
        bits = list(bits)
        if len(bits) != t + p:
            raise ValueError("need exactly t + p membership bits")
        prefix = [k for k in range(t) if bits[k]]
        residues = [(t + j) % p for j in range(p) if bits[t + j]]
        return cls(t, prefix, p, residues)

    def __contains__(self, k: int) -> bool:
        return member(self, k)

    def __repr__(self) -> str:
        return (f"EventuallyPeriodicNatSet(t={self.t}, prefix={sorted(self.prefix)}, "
                f"p={self.p}, residues={sorted(self.residues)})")

    def to_dict(self) -> dict:
        return {"t": self.t, "prefix": sorted(self.prefix), "p": self.p, "residues": sorted(self.residues)}

    @classmethod
    def from_dict(cls, d: dict) -> EventuallyPeriodicNatSet:
        return cls(d["t"], d["prefix"], d["p"], d["residues"])

    def __and__(self, other: EventuallyPeriodicNatSet) -> EventuallyPeriodicNatSet:
        return intersect(self, other)


EMPTY = EventuallyPeriodicNatSet()
NATURALS = EventuallyPeriodicNatSet(0, (), 1, (0,))


def member(s: EventuallyPeriodicNatSet, k: int) -> bool:
    if k < 0:
        return False
    if k < s.t:
        return k in s.prefix
    return (k % s.p) in s.residues


def intersect(a: EventuallyPeriodicNatSet, b: EventuallyPeriodicNatSet) -> EventuallyPeriodicNatSet:
    p = lcm(a.p, b.p)
    t = max(a.t, b.t)
    prefix = [k for k in range(t) if member(a, k) and member(b, k)]
    residues = [r for r in range(p) if (r % a.p) in a.residues and (r % b.p) in b.residues]
    return EventuallyPeriodicNatSet(t, prefix, p, residues)


def is_infinite(s: EventuallyPeriodicNatSet) -> bool:
    return bool(s.residues)


def is_cofinite(s: EventuallyPeriodicNatSet) -> bool:
    return len(s.residues) == s.p


def is_full(s: EventuallyPeriodicNatSet) -> bool:
    return s == NATURALS


def syndetic_width(s: EventuallyPeriodicNatSet) -> int | None:
    """Least m with ``[k, k+m]`` meeting ``s`` for every k, or None if unbounded.

    Gaps repeat once past ``t``, so scanning ``[0, t + 2p]`` sees every gap.
    """
    if not s.residues:
        return None
    members = [k for k in range(s.t + 2 * s.p + 1) if member(s, k)]
    # the window starting at 0 must reach the first member; after that the
    # worst window spans two consecutive members
    width = members[0]
    for a, b in zip(members, members[1:]):
        width = max(width, b - a - 1)
    return width


def is_syndetic(s: EventuallyPeriodicNatSet) -> bool:
    return syndetic_width(s) is not None


def contains_multiples(s: EventuallyPeriodicNatSet, m_max: int | None = None) -> int | None:
    """Least ``m <= m_max`` with ``m*N ⊆ s``, else None. Default cap ``p*(t+1)``."""
    if m_max is None:
        m_max = s.p * (s.t + 1)
    for m in range(1, m_max + 1):
        if any(not member(s, k) for k in range(0, s.t, m)):
            continue
        # multiples of m at or beyond t hit exactly the residues that are multiples of gcd(m, p)
        g = gcd(m, s.p)
        if all(r in s.residues for r in range(0, s.p, g)):
            return m
    return None
