"""Whole-system verdicts: Ω(f), R(f), minimal sets, transitivity, ergodicity, mixing."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import natset
from .dynamics import classify_points, eventual_image, hit_set
from .errors import InvariantViolation
from .fgraph import FunctionalMap, product_map, rho_decompose
from .pointset import PointSet
from .topology import minimal_opens


class ErgodicKind(str, Enum):
    NOT_ERGODIC = "not_ergodic"
    # the only kind a finite set admits; the shift on Z and a Z⁻ tail
    # feeding a cycle need infinitely many points
    SINGLE_CYCLE = "single_cycle"


@dataclass(frozen=True)
class SystemReport:
    omega_set: PointSet
    recurrent_set: PointSet
    minimal_sets: tuple[PointSet, ...]
    transitive: bool
    transitive_points: PointSet
    top_ergodic: bool
    weakly_mixing: bool
    strongly_mixing: bool
    ergodic_kind: ErgodicKind


def non_wandering_set(f: FunctionalMap) -> PointSet:
    return eventual_image(f)


def recurrent_set(f: FunctionalMap) -> PointSet:
    return rho_decompose(f).periodic


def minimal_sets(f: FunctionalMap) -> list[PointSet]:
    """The cycles of f, ordered by least point."""
    return list(rho_decompose(f).cycles)


def is_transitive(f: FunctionalMap) -> bool:
    rho = rho_decompose(f)
    verdict = rho.n_cycles == 1 and rho.cycle_len[0] == f.n
    n = f.n
    V = minimal_opens(f)
    direct = any(
        all(natset.is_infinite(hit_set(f, PointSet(n, 1 << x), V[y])) for y in range(n))
        for x in range(n))
    if direct != verdict:
        raise InvariantViolation("transitivity: single-cycle test and transitive-point search disagree")
    return verdict


def _distinct_minimal_opens(f: FunctionalMap) -> list[PointSet]:
    return sorted(set(minimal_opens(f).V))


def is_top_ergodic(f: FunctionalMap) -> bool:
    """Surjective, and any two minimal open sets are nested."""
    if not f.is_surjective():
        return False
    Vs = _distinct_minimal_opens(f)
    return all(a.issubset(b) or b.issubset(a) for i, a in enumerate(Vs) for b in Vs[i + 1:])


def _rectangle(n: int, a: PointSet, b: PointSet) -> PointSet:
    bits = 0
    for x in a:
        bits |= b.bits << (x * n)
    return PointSet(n * n, bits)


def is_weakly_mixing(f: FunctionalMap) -> bool:
    """``f × f`` is topologically ergodic for the product topology on X².

    Open rectangles ``V(a) × V(b)`` form a base there, so the quantifier
    runs over pairs of them, with hit sets taken on the materialized
    product map. Diagonal rectangles go first: ``D(U×U, W×W) = D(U, W)``,
    so a non-ergodic f fails in that pass.
    """
    n = f.n
    f2 = product_map(f)
    Vs = _distinct_minimal_opens(f)
    for u in Vs:
        for w in Vs:
            if not natset.is_infinite(hit_set(f2, _rectangle(n, u, u), _rectangle(n, w, w))):
                return False
    rects = [_rectangle(n, a, b) for a in Vs for b in Vs]
    return all(natset.is_infinite(hit_set(f2, r, s)) for r in rects for s in rects)


def is_strongly_mixing(f: FunctionalMap) -> bool:
    Vs = _distinct_minimal_opens(f)
    return all(natset.is_cofinite(hit_set(f, u, w)) for u in Vs for w in Vs)


def ergodic_kind(f: FunctionalMap) -> ErgodicKind:
    return ErgodicKind.SINGLE_CYCLE if is_top_ergodic(f) else ErgodicKind.NOT_ERGODIC


def system_report(f: FunctionalMap) -> SystemReport:
    pc = classify_points(f)
    ergodic = is_top_ergodic(f)
    return SystemReport(
        omega_set=non_wandering_set(f),
        recurrent_set=recurrent_set(f),
        minimal_sets=tuple(minimal_sets(f)),
        transitive=is_transitive(f),
        transitive_points=pc.as_set("transitive_point"),
        top_ergodic=ergodic,
        weakly_mixing=is_weakly_mixing(f),
        strongly_mixing=is_strongly_mixing(f),
        ergodic_kind=ErgodicKind.SINGLE_CYCLE if ergodic else ErgodicKind.NOT_ERGODIC,
    )
