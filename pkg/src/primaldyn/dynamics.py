"""Orbit-level machinery: hit-time sets, preorbits, limit sets, point classes.

Every "for all neighborhoods U of x" below is evaluated at ``U = V(x)``
only. Neighborhoods of x are exactly the supersets of V(x) and
``D(A, U)`` only grows with U, so infinite/syndetic/contains-mN at V(x)
implies the same for every neighborhood. Likewise "every non-empty open
set" reduces to the sets V(y): each non-empty open contains some V(y).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import natset
from ._backend import kernels
from .errors import InvariantViolation, LimitExceeded
from .fgraph import FunctionalMap, RhoDecomposition, rho_decompose
from .natset import EventuallyPeriodicNatSet
from .pointset import PointSet
from .topology import minimal_opens, orbit


# scan results repeat heavily across pairs and maps; values are immutable
_from_scan = lru_cache(maxsize=1 << 16)(EventuallyPeriodicNatSet.from_bits)


def hit_set(f: FunctionalMap, a: PointSet, b: PointSet) -> EventuallyPeriodicNatSet:
    """``D(A, B) = {k : f^k(A) ∩ B ≠ ∅}``, exactly.

    Set images ``f^k(A)`` are followed until a state repeats; the bits
    before the repeat are the prefix, the bits of the loop the residues.
    """
    if len(a) == 1:
        return point_hit_set(f, a.min(), membership(b))
    t, p, hits = kernels.scan_set_orbit(f.succ, a.bits, b.bits)
    return _from_scan(t, p, hits)


def membership(b: PointSet) -> bytes:
    """``b`` as one 0/1 byte per point, the target format of ``point_hit_set``."""
    return bytes((b.bits >> i) & 1 for i in range(b.n))


def point_hit_set(f: FunctionalMap, x: int, target: bytes) -> EventuallyPeriodicNatSet:
    """``D(x, B)`` with B given as membership bytes; reuse one target across calls."""
    t, p, hits = kernels.scan_point_orbit(f.succ, x, target)
    return _from_scan(t, p, hits)


def eventual_image(f: FunctionalMap) -> PointSet:
    """``∩_k f^k(X)``; the chain ``X ⊇ f(X) ⊇ ...`` stabilizes within n steps."""
    cur = (1 << f.n) - 1
    while True:
        nxt = f.image_bits(cur)
        if nxt == cur:
            return PointSet(f.n, cur)
        cur = nxt


@dataclass(frozen=True)
class Preorbit:
    """``points[k]`` is x̂(k), so ``f(points[k]) == points[k-1]``."""

    points: tuple[int, ...]
    complete: bool
    extends_to_infinite: bool


def has_infinite_preorbit(f: FunctionalMap, x: int) -> bool:
    return x in eventual_image(f)


def preorbits(f: FunctionalMap, x: int, limit: int, depth: int | None = None) -> list[Preorbit]:
    """Complete preorbits of x, depth first with ascending preimages.

    Each is cut after ``depth`` points (default ``limit``). A cut preorbit
    that ends on a point with an infinite backward chain is reported as
    complete with ``extends_to_infinite``; one cut elsewhere is incomplete.
    More than ``limit`` results raises ``LimitExceeded``.
    """
    if depth is None:
        depth = limit
    infinite = eventual_image(f)
    pre = f.preimages
    out: list[Preorbit] = []
    stack = [(x,)]
    while stack:
        path = stack.pop()
        z = path[-1]
        if not pre[z]:
            out.append(Preorbit(path, True, False))
        elif len(path) >= depth:
            ext = z in infinite
            out.append(Preorbit(path, ext, ext))
        else:
            stack.extend(path + (w,) for w in reversed(pre[z]))
            continue
        if len(out) > limit:
            raise LimitExceeded(f"more than {limit} complete preorbits of {x}", len(out))
    return out


def omega_limit(f: FunctionalMap, x: int, rho: RhoDecomposition | None = None) -> PointSet:
    """``ω(x) = ∩_k closure(O(f^k(x)))``, with ``closure(O(y)) = O(y)``.

    The orbit tails stop changing once x has reached its cycle, so k runs up
    to ``tail + period``. The result is checked against the cycle of x.
    """
    rho = rho or rho_decompose(f)
    acc = PointSet.full(f.n)
    y = x
    for _ in range(rho.tail_len[x] + rho.period(x) + 1):
        acc &= orbit(f, y)
        y = f.succ[y]
    if acc != rho.cycles[rho.cycle_id[x]]:
        raise InvariantViolation(f"ω({x}) = {acc.to_list()} is not the cycle of its component")
    return acc


@dataclass(frozen=True)
class PointClassification:
    periodic: tuple[bool, ...]
    eventually_periodic: tuple[bool, ...]
    recurrent: tuple[bool, ...]
    quasi_periodic: tuple[bool, ...]
    almost_periodic: tuple[bool, ...]
    transitive_point: tuple[bool, ...]
    non_wandering: tuple[bool, ...]
    omega: tuple[PointSet, ...]
    # least m with mN ⊆ D(x, V(x)), when one exists
    quasi_period: tuple[int | None, ...]

    def as_set(self, name: str) -> PointSet:
        flags = getattr(self, name)
        return PointSet.of(len(flags), (x for x, b in enumerate(flags) if b))


def classify_points(f: FunctionalMap) -> PointClassification:
    return _classify(f)


@lru_cache(maxsize=512)
def _classify(f: FunctionalMap) -> PointClassification:
    rho = rho_decompose(f)
    V = minimal_opens(f)
    n = f.n
    rows = {name: [] for name in (
        "periodic", "eventually_periodic", "recurrent", "quasi_periodic",
        "almost_periodic", "transitive_point", "non_wandering", "omega", "quasi_period")}
    for x in range(n):
        single = PointSet(n, 1 << x)
        back = hit_set(f, single, V[x])
        periodic = rho.tail_len[x] == 0
        m = natset.contains_multiples(back)
        if (m is not None) != periodic:
            raise InvariantViolation(f"quasi-periodicity search disagrees with periodicity at {x}")
        rows["periodic"].append(periodic)
        # tail_len is finite for every point of a finite set
        rows["eventually_periodic"].append(rho.tail_len[x] >= 0)
        rows["recurrent"].append(natset.is_infinite(back))
        rows["quasi_periodic"].append(m is not None)
        rows["quasi_period"].append(m)
        rows["almost_periodic"].append(natset.is_syndetic(back))
        rows["transitive_point"].append(
            all(natset.is_infinite(hit_set(f, single, V[y])) for y in range(n)))
        rows["non_wandering"].append(natset.is_infinite(hit_set(f, V[x], V[x])))
        rows["omega"].append(omega_limit(f, x, rho))
    return PointClassification(**{k: tuple(v) for k, v in rows.items()})
