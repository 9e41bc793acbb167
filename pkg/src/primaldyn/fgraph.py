"""Finite self-maps, example families and the rho (tail/cycle) decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from ._backend import kernels
from .errors import EmptyDomain, IndexOutOfRange
from .pointset import PointSet


@dataclass(frozen=True)
class FunctionalMap:
    """A total self-map of ``{0, ..., n-1}`` given by its successor table."""

    succ: tuple[int, ...]

    def __post_init__(self):
        n = len(self.succ)
        if n == 0:
            raise EmptyDomain("a self-map needs at least one point")
        for x, y in enumerate(self.succ):
            if not 0 <= y < n:
                raise IndexOutOfRange(f"succ[{x}] = {y} is not in [0, {n})")

    @property
    def n(self) -> int:
        return len(self.succ)

    def __call__(self, x: int) -> int:
        return self.succ[x]

    @cached_property
    def _bit(self) -> tuple[int, ...]:
        return tuple(1 << y for y in self.succ)

    @cached_property
    def preimages(self) -> tuple[tuple[int, ...], ...]:
        pre: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in enumerate(self.succ):
            pre[y].append(x)
        return tuple(tuple(p) for p in pre)

    def image_bits(self, bits: int) -> int:
        bit = self._bit
        out = 0
        while bits:
            low = bits & -bits
            out |= bit[low.bit_length() - 1]
            bits ^= low
        return out

    def image(self, a: PointSet) -> PointSet:
        return PointSet(self.n, self.image_bits(a.bits))

    def preimage(self, a: PointSet) -> PointSet:
        return PointSet.of(self.n, (x for x, y in enumerate(self.succ) if y in a))

    def is_surjective(self) -> bool:
        return all(self.preimages)

    def is_bijective(self) -> bool:
        return len(set(self.succ)) == self.n

    def to_list(self) -> list[int]:
        return list(self.succ)


def load_map(raw: Sequence[int]) -> FunctionalMap:
    """Validate ``raw`` as a successor table (``raw[x] = f(x)``)."""
    return FunctionalMap(tuple(int(v) for v in raw))


def gen_mod_mul(m: int, N: int) -> FunctionalMap:
    """``i -> m*i mod N`` on ``Z_N``: a finite stand-in for ``z -> z**m`` on the circle."""
    if m < 2 or N < 1:
        raise ValueError("need m >= 2 and N >= 1")
    return FunctionalMap(tuple((m * i) % N for i in range(N)))


def tower_index(i: int, j: int, J: int) -> int:
    return i * (J + 1) + j


def gen_tower(m: int, n: int, J: int) -> FunctionalMap:
    """``(i, j) -> ((i+1) mod m, j // n)`` on ``Z_m x {0..J}``.

    ``{0..J}`` is closed under ``j -> j // n``, so the truncation is an exact
    invariant piece of the map on ``Z_m x N``. Point ``(i, j)`` has index
    ``i*(J+1) + j``.
    """
    if m < 1 or n < 2 or J < 0:
        raise ValueError("need m >= 1, n >= 2, J >= 0")
    succ = [0] * (m * (J + 1))
    for i in range(m):
        for j in range(J + 1):
            succ[tower_index(i, j, J)] = tower_index((i + 1) % m, j // n, J)
    return FunctionalMap(tuple(succ))


_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 (Steele, Lea, Flood 2014). Deterministic on every platform."""

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection (no modulo bias)."""
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            v = self.next()
            if v < limit:
                return v % bound


def gen_random(n: int, seed: int) -> FunctionalMap:
    """Uniform random self-map; ``succ[i]`` is the i-th SplitMix64 draw below n."""
    if n < 1:
        raise ValueError("need n >= 1")
    rng = SplitMix64(seed)
    return FunctionalMap(tuple(rng.below(n) for _ in range(n)))


def product_map(f: FunctionalMap) -> FunctionalMap:
    """``(x, y) -> (f(x), f(y))`` on ``n*n`` points, pair ``(x, y)`` at index ``x*n + y``."""
    n = f.n
    s = f.succ
    return FunctionalMap(tuple(s[x] * n + s[y] for x in range(n) for y in range(n)))


@dataclass(frozen=True)
class RhoDecomposition:
    tail_len: tuple[int, ...]
    cycle_id: tuple[int, ...]
    cycle_len: tuple[int, ...]
    cycle_entry: tuple[int, ...]
    cycle_pos: tuple[int, ...]
    component_id: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.tail_len)

    @property
    def n_cycles(self) -> int:
        return len(self.cycle_len)

    @property
    def n_components(self) -> int:
        return max(self.component_id) + 1

    def is_periodic(self, x: int) -> bool:
        return self.tail_len[x] == 0

    @cached_property
    def periodic(self) -> PointSet:
        return PointSet.of(self.n, (x for x in range(self.n) if self.tail_len[x] == 0))

    @cached_property
    def cycles(self) -> tuple[PointSet, ...]:
        """One point set per cycle, indexed by cycle id (ordered by least point)."""
        bits = [0] * self.n_cycles
        for x in range(self.n):
            if self.tail_len[x] == 0:
                bits[self.cycle_id[x]] |= 1 << x
        return tuple(PointSet(self.n, b) for b in bits)

    @cached_property
    def components(self) -> tuple[PointSet, ...]:
        bits = [0] * self.n_components
        for x in range(self.n):
            bits[self.component_id[x]] |= 1 << x
        return tuple(PointSet(self.n, b) for b in bits)

    def period(self, x: int) -> int:
        return self.cycle_len[self.cycle_id[x]]


@lru_cache(maxsize=1024)
def rho_decompose(f: FunctionalMap) -> RhoDecomposition:
    tail, cid, clen, entry, pos = kernels.rho_arrays(f.succ)
    comp = kernels.component_labels(f.succ)
    return RhoDecomposition(
        tail_len=tuple(tail),
        cycle_id=tuple(cid),
        cycle_len=tuple(clen),
        cycle_entry=tuple(entry),
        cycle_pos=tuple(pos),
        component_id=tuple(comp),
    )


def iterate(f: FunctionalMap, x: int, k: int, rho: RhoDecomposition | None = None) -> int:
    """``f^k(x)``. With ``rho`` the walk is cut to at most ``tail + period`` steps."""
    if not 0 <= x < f.n:
        raise IndexOutOfRange(f"point {x} is not in [0, {f.n})")
    if k < 0:
        raise ValueError("k must be non-negative")
    if rho is None or k <= rho.tail_len[x]:
        return kernels.iterate(f.succ, x, k)
    rest = (k - rho.tail_len[x]) % rho.period(x)
    return kernels.iterate(f.succ, rho.cycle_entry[x], rest)
