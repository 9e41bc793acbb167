"""Base entourage U_τ, Lyapunov stability, sensitivity and proximal pairs.

Only the base entourage ``U_τ = {(x, y) : y ∈ V(x)}`` is modeled. Every
entourage of the quasi-uniformity it generates is a superset of U_τ, and
all quantities here are monotone in the entourage, so U_τ is the extreme
case for each "for all U" and the only candidate for each "exists U".

Pair dynamics run on the product map ``(x, y) -> (f(x), f(y))``: the hit
set of a pair is ``{k : (f^k(x), f^k(y)) ∈ U_τ}``, with U_τ read as a set
of points of the product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import natset
from .dynamics import membership, point_hit_set
from .errors import CertificateFailure
from .fgraph import FunctionalMap, iterate, product_map, rho_decompose
from .natset import EventuallyPeriodicNatSet
from .pointset import PointSet
from .system import is_transitive
from .topology import closure, minimal_opens


@dataclass(frozen=True)
class PairRelation:
    """Subset of X², stored row-wise: ``rows[x]`` is the bitmask of y with (x, y) in R."""

    n: int
    rows: tuple[int, ...]

    @classmethod
    def from_pairs(cls, n, pairs):
        rows = [0] * n
        for x, y in pairs:
            rows[x] |= 1 << y
        return cls(n, tuple(rows))

    def __contains__(self, pair) -> bool:
        x, y = pair
        return (self.rows[x] >> y) & 1 == 1

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(self.n) for y in PointSet(self.n, self.rows[x])]

    def __len__(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def inverse(self) -> PairRelation:
        return PairRelation.from_pairs(self.n, ((y, x) for x, y in self.pairs()))

    def __or__(self, other: PairRelation) -> PairRelation:
        return PairRelation(self.n, tuple(a | b for a, b in zip(self.rows, other.rows)))

    def compose(self, other: PairRelation) -> PairRelation:
        """``{(x, z) : (x, y) ∈ self and (y, z) ∈ other}``."""
        rows = []
        for r in self.rows:
            acc = 0
            for y in PointSet(self.n, r):
                acc |= other.rows[y]
            rows.append(acc)
        return PairRelation(self.n, tuple(rows))

    def is_reflexive(self) -> bool:
        return all((r >> x) & 1 for x, r in enumerate(self.rows))

    def is_transitive(self) -> bool:
        return self.compose(self).issubset(self)

    def issubset(self, other: PairRelation) -> bool:
        return all(a & ~b == 0 for a, b in zip(self.rows, other.rows))

    def as_pointset(self) -> PointSet:
        """Rows packed into a point set of the product, pair (x, y) at x*n + y."""
        bits = 0
        for x, r in enumerate(self.rows):
            bits |= r << (x * self.n)
        return PointSet(self.n * self.n, bits)


def base_entourage(f: FunctionalMap) -> PairRelation:
    V = minimal_opens(f)
    return PairRelation(f.n, tuple(v.bits for v in V.V))


@lru_cache(maxsize=256)
def pair_hit_sets(f: FunctionalMap) -> tuple[tuple[EventuallyPeriodicNatSet, ...], ...]:
    """``D_{f×f}((x, y), U_τ)`` for every pair, as ``table[x][y]``."""
    n = f.n
    f2 = product_map(f)
    target = membership(base_entourage(f).as_pointset())
    return tuple(tuple(point_hit_set(f2, x * n + y, target) for y in range(n)) for x in range(n))


def stability_set(f: FunctionalMap, x: int) -> PointSet:
    """``N(x, U_τ)``: the y whose pair orbit with x never leaves U_τ."""
    row = pair_hit_sets(f)[x]
    return PointSet.of(f.n, (y for y in range(f.n) if natset.is_full(row[y])))


@dataclass(frozen=True)
class StabilityCertificate:
    """Per point: the neighborhood used, and how many iterates were checked."""

    neighborhoods: tuple[PointSet, ...]
    steps_checked: tuple[int, ...]
    stability_sets: tuple[PointSet, ...]

    def __len__(self) -> int:
        return len(self.neighborhoods)


def stability_check(f: FunctionalMap) -> StabilityCertificate:
    """Verify ``f^k(V(x)) ⊆ V(f^k(x))`` for all x and all k up to tail + period.

    Past that many steps both sides repeat with the cycle, so the check is
    exhaustive. Also verifies ``V(x) ⊆ N(x, U_τ)`` from the pair orbits.
    """
    rho = rho_decompose(f)
    V = minimal_opens(f)
    steps = []
    nsets = []
    for x in range(f.n):
        k_max = rho.tail_len[x] + rho.period(x)
        img = V[x]
        for k in range(k_max + 1):
            fx = iterate(f, x, k, rho)
            if not img.issubset(V[fx]):
                raise CertificateFailure(f"f^{k}(V({x})) is not inside V({fx})")
            img = f.image(img)
        nx = stability_set(f, x)
        if not V[x].issubset(nx):
            raise CertificateFailure(f"N({x}, U_τ) is not a neighborhood of {x}")
        steps.append(k_max)
        nsets.append(nx)
    return StabilityCertificate(tuple(V.V), tuple(steps), tuple(nsets))


def is_sensitive(f: FunctionalMap) -> bool:
    """Some entourage makes N(x, U) a non-neighborhood at every x.

    Evaluated at U_τ from the pair orbits; always comes out False.
    """
    V = minimal_opens(f)
    return all(not V[x].issubset(stability_set(f, x)) for x in range(f.n))


def periodic_points_dense(f: FunctionalMap) -> bool:
    return closure(f, rho_decompose(f).periodic) == PointSet.full(f.n)


def is_ay_chaotic(f: FunctionalMap) -> bool:
    return is_transitive(f) and is_sensitive(f)


def is_d_chaotic(f: FunctionalMap) -> bool:
    return is_ay_chaotic(f) and periodic_points_dense(f)


def triangle_witness(f: FunctionalMap, x: int, y: int) -> tuple[int, int] | None:
    """Some ``(m, k)`` with ``m <= k`` and ``f^m(x) == f^k(y)``, or None.

    Both points reach the cycle of their component, x after ``a`` steps and
    y after ``b``. Taking ``m = a`` and rotating y's cycle entry round to
    x's gives a meeting time k; adding whole periods to k (pumping) makes
    ``k >= m``. Different components never meet.
    """
    rho = rho_decompose(f)
    if rho.component_id[x] != rho.component_id[y]:
        return None
    p = rho.period(x)
    m = rho.tail_len[x]
    k = rho.tail_len[y] + (rho.cycle_pos[x] - rho.cycle_pos[y]) % p
    if k < m:
        k += -(-(m - k) // p) * p
    return m, k


@lru_cache(maxsize=256)
def triangle_relation(f: FunctionalMap) -> PairRelation:
    """``x ◁ y`` iff ``f^m(x) = f^k(y)`` for some ``m <= k``."""
    rho = rho_decompose(f)
    pairs = []
    for x in range(f.n):
        for y in range(f.n):
            w = triangle_witness(f, x, y)
            if w is None:
                continue
            m, k = w
            if iterate(f, x, m, rho) != iterate(f, y, k, rho):
                raise CertificateFailure(f"bad ◁ witness {w} for ({x}, {y})")
            pairs.append((x, y))
    return PairRelation.from_pairs(f.n, pairs)


def orbital_relation(f: FunctionalMap) -> PairRelation:
    """``x ∼ y``: same connected component."""
    comp = rho_decompose(f).components
    cid = rho_decompose(f).component_id
    return PairRelation(f.n, tuple(comp[cid[x]].bits for x in range(f.n)))


def prox_asym_syprox(f: FunctionalMap) -> tuple[PairRelation, PairRelation, PairRelation]:
    """Proximal, asymptotic and syndetically proximal pairs under U_τ."""
    table = pair_hit_sets(f)
    n = f.n
    prox, asym, syprox = [0] * n, [0] * n, [0] * n
    for x in range(n):
        for y in range(n):
            d = table[x][y]
            if natset.is_infinite(d):
                prox[x] |= 1 << y
            if natset.is_cofinite(d):
                asym[x] |= 1 << y
            if natset.is_syndetic(d):
                syprox[x] |= 1 << y
    return PairRelation(n, tuple(prox)), PairRelation(n, tuple(asym)), PairRelation(n, tuple(syprox))
