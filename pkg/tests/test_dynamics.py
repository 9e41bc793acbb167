import pytest

from primaldyn import natset
from primaldyn.dynamics import (
    classify_points,
    eventual_image,
    has_infinite_preorbit,
    hit_set,
    omega_limit,
    preorbits,
)
from primaldyn.errors import LimitExceeded
from primaldyn.fgraph import gen_random, gen_tower, iterate, load_map, rho_decompose, tower_index
from primaldyn.natset import EMPTY, EventuallyPeriodicNatSet as S
from primaldyn.pointset import PointSet
from primaldyn.topology import minimal_opens, orbit

P = PointSet.of


def brute_hits(f, a, b, horizon):
    out = []
    cur = set(a)
    for _ in range(horizon):
        out.append(bool(cur & set(b)))
        cur = {f(x) for x in cur}
    return out


def test_hit_set_examples():
    f = load_map([1, 2, 0])
    assert hit_set(f, PointSet.empty(3), P(3, [1])) == EMPTY
    assert hit_set(f, P(3, [0]), PointSet.empty(3)) == EMPTY
    assert hit_set(f, P(3, [0]), P(3, [1])) == S(0, (), 3, [1])
    assert hit_set(load_map([0, 0, 1]), P(3, [2]), P(3, [2])) == S(1, [0], 1, [])


@pytest.mark.parametrize("seed", range(80))
def test_hit_set_matches_unrolled_orbit(seed):
    import random
    rng = random.Random(seed)
    f = gen_random(1 + seed % 12, seed)
    for _ in range(5):
        a = PointSet(f.n, rng.getrandbits(f.n))
        b = PointSet(f.n, rng.getrandbits(f.n))
        d = hit_set(f, a, b)
        expected = brute_hits(f, a, b, 300)
        assert [natset.member(d, k) for k in range(300)] == expected


def test_eventual_image():
    assert eventual_image(load_map([0, 0, 1])) == P(3, [0])
    assert eventual_image(load_map([1, 2, 0])) == PointSet.full(3)


def test_has_infinite_preorbit():
    assert has_infinite_preorbit(load_map([1, 2, 0]), 1)
    assert not has_infinite_preorbit(load_map([0, 0, 1]), 2)
    assert has_infinite_preorbit(load_map([0, 0, 1]), 0)


@pytest.mark.parametrize("seed", range(40))
def test_infinite_preorbit_iff_cycle_behind(seed):
    f = gen_random(1 + seed % 10, 300 + seed)
    V = minimal_opens(f)
    rho = rho_decompose(f)
    for x in range(f.n):
        assert has_infinite_preorbit(f, x) == (not V[x].isdisjoint(rho.periodic))


def test_preorbits_examples():
    got = preorbits(load_map([0, 0, 1]), 2, limit=5)
    assert [p.points for p in got] == [(2,)] and got[0].complete
    got = preorbits(load_map([1, 2, 0]), 0, limit=3, depth=7)
    assert len(got) == 1
    assert got[0].points == (0, 2, 1, 0, 2, 1, 0)
    assert got[0].extends_to_infinite and got[0].complete
    got = preorbits(load_map([0, 0, 0]), 0, limit=10, depth=3)
    assert [p.points for p in got] == [(0, 0, 0), (0, 0, 1), (0, 0, 2), (0, 1), (0, 2)]
    assert [p.extends_to_infinite for p in got] == [True, False, False, False, False]
    assert all(p.complete for p in got)


def test_preorbits_limit():
    with pytest.raises(LimitExceeded) as err:
        preorbits(load_map([0, 0, 0]), 0, limit=3, depth=10)
    assert err.value.count == 4


@pytest.mark.parametrize("seed", range(30))
def test_preorbit_invariants(seed):
    f = gen_random(2 + seed % 8, 900 + seed)
    for x in range(f.n):
        for p in preorbits(f, x, limit=10_000, depth=f.n + 2):
            pts = p.points
            assert pts[0] == x
            assert all(f(pts[k]) == pts[k - 1] for k in range(1, len(pts)))
            assert p.complete == (p.extends_to_infinite or not f.preimages[pts[-1]])


def test_omega_limit_examples():
    f = load_map([0, 0, 1])
    assert omega_limit(f, 2) == P(3, [0])
    g = load_map([1, 2, 0])
    assert omega_limit(g, 1) == orbit(g, 1)
    t = gen_tower(2, 2, 3)
    cyc = P(t.n, [tower_index(0, 0, 3), tower_index(1, 0, 3)])
    assert all(omega_limit(t, x) == cyc for x in range(t.n))


def test_classify_three_cycle():
    pc = classify_points(load_map([1, 2, 0]))
    for name in ("periodic", "recurrent", "quasi_periodic", "almost_periodic",
                 "transitive_point", "non_wandering"):
        assert getattr(pc, name) == (True, True, True), name


def test_classify_chain():
    pc = classify_points(load_map([0, 0, 1]))
    assert pc.recurrent == (True, False, False)
    assert pc.non_wandering == (True, False, False)
    assert pc.eventually_periodic == (True, True, True)
    assert pc.quasi_period == (1, None, None)


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_classify_identity(n):
    pc = classify_points(load_map(list(range(n))))
    assert all(pc.periodic) and all(pc.recurrent)
    assert all(pc.transitive_point) == (n == 1)
    assert any(pc.transitive_point) == (n == 1)


@pytest.mark.parametrize("seed", range(60))
def test_point_classes_collapse_to_periodicity(seed):
    f = gen_random(1 + seed % 12, 4000 + seed)
    pc = classify_points(f)
    assert pc.recurrent == pc.periodic
    assert pc.quasi_periodic == pc.periodic
    assert pc.almost_periodic == pc.recurrent
    assert pc.as_set("non_wandering") == eventual_image(f) == rho_decompose(f).periodic
    for x in range(f.n):
        assert pc.eventually_periodic[x]
        # a return into V(x) at a positive time forces periodicity
        V = minimal_opens(f)
        if any(iterate(f, x, k) in V[x] for k in range(1, f.n + 1)):
            assert pc.quasi_periodic[x] and pc.periodic[x]
