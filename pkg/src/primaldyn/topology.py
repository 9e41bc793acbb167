"""The primal topology of a self-map: opens are the sets A with f⁻¹(A) ⊆ A."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainTooLarge
from .fgraph import FunctionalMap, rho_decompose
from .pointset import PointSet

DEFAULT_OPEN_CAP = int(os.environ.get("PRIMALDYN_OPEN_CAP", "20"))


@dataclass(frozen=True)
class MinimalOpenFamily:
    """``V[x]`` is the smallest open set containing x: every y with some f^k(y) = x."""

    V: tuple[PointSet, ...]

    def __getitem__(self, x: int) -> PointSet:
        return self.V[x]

    def __len__(self) -> int:
        return len(self.V)


@dataclass(frozen=True)
class OpenSetCatalog:
    opens: tuple[PointSet, ...]
    n_cap: int

    @property
    def count(self) -> int:
        return len(self.opens)


@lru_cache(maxsize=1024)
def minimal_opens(f: FunctionalMap) -> MinimalOpenFamily:
    """Backward-reachable sets for every point in O(n) big-int unions.

    Off-cycle points are processed by decreasing tail length, so each one
    folds in its already finished preimages. Every point of a cycle shares
    one set: the whole component it belongs to.
    """
    rho = rho_decompose(f)
    n = f.n
    bits = [1 << x for x in range(n)]
    for x in sorted((x for x in range(n) if rho.tail_len[x] > 0), key=lambda x: -rho.tail_len[x]):
        y = f.succ[x]
        if rho.tail_len[y] > 0:
            bits[y] |= bits[x]
    comp = [0] * rho.n_components
    for x in range(n):
        comp[rho.component_id[x]] |= 1 << x
    for x in range(n):
        if rho.tail_len[x] == 0:
            bits[x] = comp[rho.component_id[x]]
    return MinimalOpenFamily(tuple(PointSet(n, b) for b in bits))


def is_open(f: FunctionalMap, a: PointSet) -> bool:
    return f.preimage(a).issubset(a)


def is_closed(f: FunctionalMap, a: PointSet) -> bool:
    return f.image(a).issubset(a)


def closure(f: FunctionalMap, a: PointSet) -> PointSet:
    """Smallest closed superset: ``A ∪ f(A) ∪ f²(A) ∪ ...``."""
    bits = a.bits
    frontier = bits
    while frontier:
        frontier = f.image_bits(frontier) & ~bits
        bits |= frontier
    return PointSet(f.n, bits)


def orbit(f: FunctionalMap, x: int) -> PointSet:
    return closure(f, PointSet(f.n, 1 << x))


def enumerate_opens(f: FunctionalMap, n_cap: int | None = None) -> OpenSetCatalog:
    """Every open set, by testing all ``2**n`` subsets (vectorized over subsets)."""
    cap = DEFAULT_OPEN_CAP if n_cap is None else n_cap
    n = f.n
    if n > cap:
        raise DomainTooLarge(f"open-set enumeration capped at n = {cap}, got n = {n}")
    masks = np.arange(1 << n, dtype=np.int64)
    # A is open iff no x outside A maps into A
    bad = np.zeros(1 << n, dtype=bool)
    for x, y in enumerate(f.succ):
        bad |= ((masks >> y) & 1).astype(bool) & ~((masks >> x) & 1).astype(bool)
    return OpenSetCatalog(tuple(PointSet(n, int(m)) for m in masks[~bad]), cap)
