"""Definition-level re-derivation of every verdict, for cross-checking.

Nothing here imports the analysis modules; only ``FunctionalMap`` and
``PointSet`` are shared. Topology comes from testing all 2**n subsets,
V(x) is the intersection of the opens containing x, and every "infinitely
often" question is answered by unrolling orbits over an explicit horizon
H: after H steps every set orbit is periodic with period at most H, so
the window ``[H, 2H)`` sees the whole eventual pattern.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import NamedTuple

import numpy as np

from .errors import BudgetExceeded
from .fgraph import FunctionalMap
from .pointset import PointSet
from .verdicts import Verdicts

DEFAULT_N_CAP = int(os.environ.get("PRIMALDYN_ORACLE_CAP", "12"))
DEFAULT_MIXING_CAP = 8


@lru_cache(maxsize=None)
def landau(n: int) -> int:
    """Largest order of a permutation of n points (max lcm over partitions of n)."""
    best = {0: {1}}
    for total in range(1, n + 1):
        best[total] = set()
    for part in range(1, n + 1):
        for total in range(n, part - 1, -1):
            for k in range(part, total + 1, part):
                for l in best[total - k]:
                    best[total].add(lcm(l, part))
    return max(max(v) for v in best.values())


@dataclass(frozen=True)
class OracleBudget:
    n_cap: int = DEFAULT_N_CAP
    horizon: int | None = None  # default 4*n*n
    mixing_cap: int = DEFAULT_MIXING_CAP

    def horizon_for(self, n: int) -> int:
        if n > self.n_cap:
            raise BudgetExceeded(f"oracle capped at n = {self.n_cap}, got n = {n}")
        h = 4 * n * n if self.horizon is None else self.horizon
        # tails of set orbits end within n steps; periods divide a permutation order
        need = max(n, landau(n))
        if h < need:
            raise BudgetExceeded(f"horizon {h} below the stabilization bound {need} for n = {n}")
        return h


class OracleOpens(NamedTuple):
    opens: tuple[PointSet, ...]
    n_cap: int

    @property
    def count(self) -> int:
        return len(self.opens)


def _image_table(succ) -> np.ndarray:
    n = len(succ)
    img = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        img[1 << i: 2 << i] = img[: 1 << i] | (1 << succ[i])
    return img


def _open_masks(succ) -> np.ndarray:
    n = len(succ)
    pre_of = [0] * n
    for x, y in enumerate(succ):
        pre_of[y] |= 1 << x
    pre = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        pre[1 << i: 2 << i] = pre[: 1 << i] | pre_of[i]
    masks = np.arange(1 << n, dtype=np.int64)
    return masks[(pre & ~masks) == 0]


def oracle_opens(f: FunctionalMap, budget: OracleBudget = OracleBudget()) -> OracleOpens:
    budget.horizon_for(f.n)
    return OracleOpens(tuple(PointSet(f.n, int(m)) for m in _open_masks(f.succ)), budget.n_cap)


def _has_bit(masks: np.ndarray, points: np.ndarray) -> np.ndarray:
    return ((masks >> points) & 1).astype(bool)


def _window_union(img: np.ndarray, h: int) -> np.ndarray:
    """Table ``U -> ∪_{h <= k < 2h} f^k(U)`` over all masks.

    Images preserve unions, so with ``R_a = ∪_{k<a} f^k`` and ``P_a = f^a``
    blocks combine as ``R_{a+b} = R_a | P_a∘R_b`` and ``P_{a+b} = P_a∘P_b``.
    """
    ident = np.arange(len(img), dtype=np.int64)
    r, pw = np.zeros_like(ident), ident
    br, bp = ident, img
    k = h
    while k:
        if k & 1:
            r, pw = r | pw[br], pw[bp]
        br, bp = br | bp[br], bp[bp]
        k >>= 1
    return pw[r]


def _window_hits(states: np.ndarray, img: np.ndarray, target, h: int) -> np.ndarray:
    """Rows of ``f^k(U) ∩ target ≠ ∅`` for k in [h, 2h), one row per start set."""
    st = states.copy()
    for _ in range(h):
        st = img[st]
    out = np.empty((h,) + np.shape(st), dtype=bool)
    for k in range(h):
        out[k] = (st & target) != 0
        st = img[st]
    return out


def oracle_predicates(f: FunctionalMap, budget: OracleBudget = OracleBudget()) -> Verdicts:
    n = f.n
    h = budget.horizon_for(n)
    succ = np.asarray(f.succ, dtype=np.int64)
    full = (1 << n) - 1
    img = _image_table(f.succ)
    opens = _open_masks(f.succ)
    nonempty = opens[opens != 0]
    closed = full ^ opens

    # orb[k, x] = f^k(x) for k < 2h
    orb = np.empty((2 * h, n), dtype=np.int64)
    orb[0] = np.arange(n)
    step, m = succ, 1
    while m < 2 * h:
        # rows [m, 2m) are f^m applied to rows [0, m)
        take = min(m, 2 * h - m)
        orb[m: m + take] = step[orb[:take]]
        step, m = step[step], 2 * m
    bit = np.left_shift(np.int64(1), orb)

    V = np.array([np.bitwise_and.reduce(opens[_has_bit(opens, np.int64(x))]) for x in range(n)],
                 dtype=np.int64)
    later = np.bitwise_or.reduce(bit[h:], axis=0)  # points visited in [h, 2h)

    periodic = recurrent = quasi = almost = tpoints = 0
    for x in range(n):
        if (orb[1: n + 1, x] == x).any():
            periodic |= 1 << x
        around = opens[_has_bit(opens, np.int64(x))]
        if ((around & later[x]) != 0).all():
            recurrent |= 1 << x
        if ((nonempty & later[x]) != 0).all():
            tpoints |= 1 << x
        # the remaining neighborhood quantifiers only need V(x): every
        # neighborhood contains it, and the hit set can only grow
        home = _has_bit(V[x], orb[:, x])
        if home[h:].any():
            almost |= 1 << x
        for m in range(1, max(1, (2 * h - n) // (2 * n)) + 1):
            if home[::m].all():
                quasi |= 1 << x
                break

    # wandering: some open U around x with U ∩ f^k(U) empty for all large k
    window = _window_union(img, h)
    returns = (window[opens] & opens) != 0
    wandering = int(np.bitwise_or.reduce(opens[~returns])) if (~returns).any() else 0
    nonwandering = full & ~wandering

    def cl(a: int) -> int:
        return int(np.bitwise_and.reduce(closed[(closed & a) == a]))

    orbit_bits = np.bitwise_or.reduce(bit, axis=0)
    cl_orbit = [cl(int(orbit_bits[y])) for y in range(n)]
    # ω(x) = ∩_{k <= h} cl(O(f^k x)); only the distinct points f^k x matter
    visited = np.bitwise_or.reduce(bit[: h + 1], axis=0)
    omega = []
    for x in range(n):
        acc = full
        for y in range(n):
            if (int(visited[x]) >> y) & 1:
                acc &= cl_orbit[y]
        omega.append(acc)

    invariant = [int(c) for c in closed if c != 0 and (img[c] & ~c) == 0]
    invariant.sort(key=lambda c: (bin(c).count("1"), c))
    minimal = []
    for c in invariant:
        if not any(m & ~c == 0 for m in minimal):
            minimal.append(c)
    minimal.sort(key=lambda c: (c & -c).bit_length())

    reach = window[nonempty]
    ergodic = bool(((reach[:, None] & nonempty[None, :]) != 0).all())

    weak = strong = None
    if n <= budget.mixing_cap:
        strong = True
        for u in nonempty:
            hits = _window_hits(np.full(len(nonempty), u), img, nonempty, h)
            if not hits.all():
                strong = False
                break
        weak = _weakly_mixing(nonempty, img, h)

    # pair orbits against U_τ = {(x, y) : y ∈ V(x)}
    inU = ((V[orb][:, :, None] >> orb[:, None, :]) & 1).astype(bool)  # [k, x, y]
    tail_part = inU[h:]
    prox = _rows(tail_part.any(axis=0))
    asym = _rows(tail_part.all(axis=0))
    syprox = _rows(_syndetic_window(inU, h))

    b = 3 * n
    A = orb[: b + 1]
    meet = A[:, None, :, None] == A[None, :, None, :]  # [m, k, x, y]
    upper = np.triu(np.ones((b + 1, b + 1), dtype=bool))
    triangle = _rows((meet & upper[:, :, None, None]).any(axis=(0, 1)))

    always = _rows(inU.all(axis=0))  # N(x, U_τ) for each x
    stable = 0
    for x in range(n):
        inside = (opens & ~np.int64(always[x])) == 0
        if (_has_bit(opens, np.int64(x)) & inside).any():
            stable |= 1 << x
    sensitive = stable == 0

    return Verdicts(
        n=n,
        opens_count=len(opens),
        periodic=periodic,
        nonwandering=nonwandering,
        recurrent=recurrent,
        quasi_periodic=quasi,
        almost_periodic=almost,
        transitive_points=tpoints,
        omega=tuple(omega),
        minimal_sets=tuple(minimal),
        transitive=tpoints != 0,
        top_ergodic=ergodic,
        weakly_mixing=weak,
        strongly_mixing=strong,
        prox=prox,
        asym=asym,
        syprox=syprox,
        triangle=triangle,
        stable=stable,
        sensitive=sensitive,
    )


def _rows(matrix: np.ndarray) -> tuple[int, ...]:
    return tuple(sum(1 << y for y in np.flatnonzero(row)) for row in matrix)


def _syndetic_window(hits: np.ndarray, h: int) -> np.ndarray:
    """Bounded gaps along axis 0 on ``[0, 2h)``, the window ``[h, 2h)`` repeating forever.

    The gaps are bounded iff the repeating window contains a hit; the
    longest run of misses is then finite and read off the unrolled prefix.
    """
    idx = np.arange(hits.shape[0]).reshape((-1,) + (1,) * (hits.ndim - 1))
    last = np.maximum.accumulate(np.where(hits, idx, -1), axis=0)
    longest_miss_run = (idx - last).max(axis=0)
    return hits[h:].any(axis=0) & (longest_miss_run < 2 * h)


def _weakly_mixing(nonempty: np.ndarray, img: np.ndarray, h: int) -> bool:
    """Every ``D(U1, V1) ∩ D(U2, V2)`` infinite, over quartets of non-empty opens.

    ``(f×f)^k(U1×U2)`` meets ``V1×V2`` iff both factors meet, so each
    product hit set is the AND of two factor hit rows.
    """
    rows = set()
    for u in nonempty:
        hits = _window_hits(np.full(len(nonempty), u), img, nonempty, h)  # [k, v]
        for j in range(len(nonempty)):
            packed = int.from_bytes(np.packbits(hits[:, j]).tobytes(), "big")
            if packed == 0:
                return False
            rows.add(packed)
    rows = sorted(rows)
    return all(a & b for i, a in enumerate(rows) for b in rows[i:])
