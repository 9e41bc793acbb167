"""Named theorem checks and pipeline-versus-oracle agreement sweeps."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import natset
from .dynamics import classify_points, eventual_image, has_infinite_preorbit, hit_set, preorbits
from .errors import PrimalDynError
from .fgraph import FunctionalMap, gen_random, iterate, product_map, rho_decompose
from .oracle import OracleBudget, oracle_predicates
from .pointset import PointSet
from .proximal import (
    is_ay_chaotic,
    is_d_chaotic,
    is_sensitive,
    orbital_relation,
    prox_asym_syprox,
    stability_check,
    triangle_relation,
)
from .system import (
    _rectangle,
    is_strongly_mixing,
    is_top_ergodic,
    is_transitive,
    is_weakly_mixing,
    minimal_sets,
    non_wandering_set,
    recurrent_set,
)
from .topology import enumerate_opens, minimal_opens, orbit
from .verdicts import Verdicts


def pipeline_verdicts(f: FunctionalMap, mixing: bool = True) -> Verdicts:
    pc = classify_points(f)
    prox, asym, syprox = prox_asym_syprox(f)
    cert = stability_check(f)
    V = minimal_opens(f)
    stable = 0
    for x in range(f.n):
        if V[x].issubset(cert.stability_sets[x]):
            stable |= 1 << x
    return Verdicts(
        n=f.n,
        opens_count=enumerate_opens(f).count,
        periodic=rho_decompose(f).periodic.bits,
        nonwandering=non_wandering_set(f).bits,
        recurrent=recurrent_set(f).bits,
        quasi_periodic=pc.as_set("quasi_periodic").bits,
        almost_periodic=pc.as_set("almost_periodic").bits,
        transitive_points=pc.as_set("transitive_point").bits,
        omega=tuple(s.bits for s in pc.omega),
        minimal_sets=tuple(s.bits for s in minimal_sets(f)),
        transitive=is_transitive(f),
        top_ergodic=is_top_ergodic(f),
        weakly_mixing=is_weakly_mixing(f) if mixing else None,
        strongly_mixing=is_strongly_mixing(f) if mixing else None,
        prox=prox.rows,
        asym=asym.rows,
        syprox=syprox.rows,
        triangle=triangle_relation(f).rows,
        stable=stable,
        sensitive=is_sensitive(f),
    )


# --- theorem checks: each returns True when the statement holds for f ---

def _nonwandering(f):
    pc = classify_points(f)
    omega = non_wandering_set(f)
    return pc.as_set("non_wandering") == omega == rho_decompose(f).periodic


def _recurrent(f):
    pc = classify_points(f)
    union = PointSet.empty(f.n)
    for s in pc.omega:
        union |= s
    return pc.as_set("recurrent") == recurrent_set(f) == union == pc.as_set("periodic")


def _minimal(f):
    orbits = {orbit(f, x) for x in range(f.n) if f.succ[x] in orbit(f, f.succ[x]) and x in orbit(f, f.succ[x])}
    return set(minimal_sets(f)) == orbits


def _transitive(f):
    single = f.is_bijective() and orbit(f, 0) == PointSet.full(f.n)
    return is_transitive(f) == single


def _mixing(f):
    return is_top_ergodic(f) == is_weakly_mixing(f) == is_strongly_mixing(f)


def _ergodic_characterization(f):
    Vs = minimal_opens(f).V
    direct = all(natset.is_infinite(hit_set(f, a, b)) for a in Vs for b in Vs)
    return is_top_ergodic(f) == direct


def _stable(f):
    return len(stability_check(f)) == f.n


def _not_sensitive(f):
    return not is_sensitive(f) and not is_ay_chaotic(f) and not is_d_chaotic(f)


def _asym_syprox_prox(f):
    prox, asym, syprox = prox_asym_syprox(f)
    return prox == asym == syprox


def _prox_triangle(f):
    return prox_asym_syprox(f)[0] == triangle_relation(f)


def _orbital(f):
    tri = triangle_relation(f)
    sim = orbital_relation(f)
    return (tri.is_reflexive() and tri.is_transitive()
            and sim == (tri | tri.inverse())
            # every finite component has a cycle, so ◁ fills each component block
            and tri == sim)


def _quasi_periodic(f):
    pc = classify_points(f)
    return pc.quasi_periodic == pc.periodic


def _almost_periodic(f):
    pc = classify_points(f)
    return pc.almost_periodic == pc.recurrent


def _returning_points(f):
    """A point with some f^k(x) ∈ V(x), k >= 1, is quasi-periodic and eventually periodic."""
    V = minimal_opens(f)
    pc = classify_points(f)
    rho = rho_decompose(f)
    for x in range(f.n):
        if any(iterate(f, x, k, rho) in V[x] for k in range(1, f.n + 1)):
            if not (pc.quasi_periodic[x] and pc.eventually_periodic[x] and pc.periodic[x]):
                return False
    return True


def _product_hits(f):
    """``D_{f×f}(U1×U2, W1×W2) = D(U1, W1) ∩ D(U2, W2)`` on minimal opens."""
    n = f.n
    f2 = product_map(f)
    Vs = sorted(set(minimal_opens(f).V))[:3]
    for u1, u2, w1, w2 in itertools.product(Vs, repeat=4):
        lhs = hit_set(f2, _rectangle(n, u1, u2), _rectangle(n, w1, w2))
        if lhs != natset.intersect(hit_set(f, u1, w1), hit_set(f, u2, w2)):
            return False
    return True


def _preorbits(f):
    if not f.is_surjective():
        return all(has_infinite_preorbit(f, x) == (x in eventual_image(f)) for x in range(f.n))
    for x in range(f.n):
        found = preorbits(f, x, limit=f.n + 1, depth=f.n + 1)
        if not all(p.complete and p.extends_to_infinite for p in found):
            return False
    return True


@dataclass(frozen=True)
class Theorem:
    name: str
    statement: str
    holds: Callable[[FunctionalMap], bool]


THEOREMS: tuple[Theorem, ...] = (
    Theorem("nonwandering_is_eventual_image", "Ω(f) = ∩ f^k(X)", _nonwandering),
    Theorem("recurrent_is_periodic", "R(f) = ∪ ω(x) = periodic points", _recurrent),
    Theorem("minimal_sets_are_cycles", "minimal sets are exactly the periodic orbits", _minimal),
    Theorem("transitive_iff_single_cycle", "transitive iff X is one periodic orbit", _transitive),
    Theorem("ergodic_iff_mixing", "ergodic iff weakly mixing iff strongly mixing", _mixing),
    Theorem("ergodic_iff_surjective_nested",
            "ergodic iff f(X) = X and the V(x) are pairwise nested", _ergodic_characterization),
    Theorem("lyapunov_stable", "f is Lyapunov stable at every point", _stable),
    Theorem("not_sensitive", "f is not sensitive, hence neither AY- nor D-chaotic", _not_sensitive),
    Theorem("asym_syprox_prox", "Asym = SyProx = Prox under U_τ", _asym_syprox_prox),
    Theorem("prox_is_triangle", "Prox under U_τ equals ◁", _prox_triangle),
    Theorem("orbital_is_triangle_symmetrized", "∼ = ◁ ∪ ◁⁻¹, ◁ a preorder filling each component",
            _orbital),
    Theorem("quasi_periodic_iff_periodic", "quasi-periodic iff periodic", _quasi_periodic),
    Theorem("almost_periodic_iff_recurrent", "almost periodic iff recurrent", _almost_periodic),
    Theorem("returning_points", "f^k(x) ∈ V(x) for k >= 1 forces quasi/eventual periodicity",
            _returning_points),
    Theorem("product_hit_sets", "D for f×f on rectangles is the intersection of factor D's",
            _product_hits),
    Theorem("surjective_preorbits_infinite", "under f(X) = X every complete preorbit is infinite",
            _preorbits),
)


def run_theorems(f: FunctionalMap) -> dict[str, bool]:
    out = {}
    for th in THEOREMS:
        try:
            out[th.name] = bool(th.holds(f))
        except PrimalDynError:
            out[th.name] = False
    return out


@dataclass
class Failure:
    succ: list[int]
    check: str
    detail: str = ""


@dataclass
class SweepResult:
    instances: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def exhaustive_maps(n: int) -> Iterator[FunctionalMap]:
    for succ in itertools.product(range(n), repeat=n):
        yield FunctionalMap(succ)


def random_maps(n: int, count: int, seed: int = 0) -> Iterator[FunctionalMap]:
    for i in range(count):
        yield gen_random(n, seed * 1_000_003 + n * 10_007 + i)


def sweep(maps: Iterable[FunctionalMap], budget: OracleBudget = OracleBudget(),
          theorems: bool = True, oracle: bool = True) -> SweepResult:
    """Run the theorem suite and oracle comparison on each map."""
    res = SweepResult()
    for f in maps:
        res.instances += 1
        if theorems:
            for name, ok in run_theorems(f).items():
                if not ok:
                    res.failures.append(Failure(f.to_list(), name))
        if oracle:
            mixing = f.n <= budget.mixing_cap
            try:
                diff = pipeline_verdicts(f, mixing=mixing).diff(oracle_predicates(f, budget))
            except PrimalDynError as exc:
                res.failures.append(Failure(f.to_list(), "oracle_agreement", repr(exc)))
                continue
            if diff:
                res.failures.append(Failure(f.to_list(), "oracle_agreement", ",".join(diff)))
    return res
