import itertools
from math import gcd

import pytest

from primaldyn.errors import EmptyDomain, IndexOutOfRange
from primaldyn.fgraph import (
    SplitMix64,
    gen_mod_mul,
    gen_random,
    gen_tower,
    iterate,
    load_map,
    product_map,
    rho_decompose,
    tower_index,
)


def brute_orbits_meet(succ, x, y):
    n = len(succ)
    seen = set()
    z = x
    for _ in range(n + 1):
        seen.add(z)
        z = succ[z]
    z = y
    for _ in range(n + 1):
        if z in seen:
            return True
        z = succ[z]
    return False


def test_load_map_examples():
    assert load_map([0]).succ == (0,)
    assert load_map([1, 2, 0]).n == 3
    with pytest.raises(IndexOutOfRange):
        load_map([0, 0, 3])
    with pytest.raises(EmptyDomain):
        load_map([])
    with pytest.raises(IndexOutOfRange):
        load_map([-1])


@pytest.mark.parametrize("m, N, expected", [
    (2, 3, [0, 2, 1]),
    (2, 1, [0]),
    (3, 4, [0, 3, 2, 1]),
])
def test_gen_mod_mul(m, N, expected):
    assert gen_mod_mul(m, N).to_list() == expected


def test_mod_mul_bijective_iff_coprime():
    for m in range(2, 9):
        for N in range(1, 25):
            assert gen_mod_mul(m, N).is_bijective() == (gcd(m, N) == 1)


def test_gen_tower_small():
    assert gen_tower(2, 2, 0).to_list() == [1, 0]
    # m = 1: f(0, j) = (0, j // 2)
    assert gen_tower(1, 2, 3).to_list() == [0, 0, 1, 1]


@pytest.mark.parametrize("m, n, J", [(2, 2, 3), (1, 2, 5), (3, 2, 4), (3, 3, 7)])
def test_tower_periodic_points_are_bottom_row(m, n, J):
    f = gen_tower(m, n, J)
    rho = rho_decompose(f)
    assert rho.periodic.to_list() == sorted(tower_index(i, 0, J) for i in range(m))
    assert rho.n_components == 1


def test_splitmix64_reference_vectors():
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(5)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423,
        4593380528125082431, 16408922859458223821]


def test_gen_random_golden_and_deterministic():
    assert gen_random(5, 42).to_list() == [3, 1, 3, 4, 0]
    assert gen_random(1, 99).to_list() == [0]
    assert gen_random(3, 7) == gen_random(3, 7)
    assert gen_random(12, 7).to_list() == [3, 0, 6, 3, 10, 9, 10, 6, 5, 5, 7, 4]


def test_rho_examples():
    rho = rho_decompose(load_map([1, 2, 0]))
    assert rho.tail_len == (0, 0, 0) and rho.cycle_len == (3,) and rho.n_components == 1
    rho = rho_decompose(load_map([0, 0, 1]))
    assert rho.tail_len == (0, 1, 2)
    assert rho.cycles[0].to_list() == [0]
    assert rho.n_components == 1


def test_iterate_examples():
    f = load_map([0, 0, 1])
    assert iterate(load_map([1, 2, 0]), 0, 3) == 0
    assert iterate(f, 2, 2) == 0
    assert iterate(f, 1, 0) == 1
    assert iterate(f, 2, 10**12, rho_decompose(f)) == 0


def all_maps(n):
    return (load_map(s) for s in itertools.product(range(n), repeat=n))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_rho_invariants_exhaustive(n):
    for f in all_maps(n):
        rho = rho_decompose(f)
        for x in range(n):
            t, p = rho.tail_len[x], rho.period(x)
            assert iterate(f, x, t + p) == iterate(f, x, t)
            assert (t == 0) == any(iterate(f, x, k) == x for k in range(1, n + 1))
            assert iterate(f, x, t) == rho.cycle_entry[x]
            assert rho.component_id[x] == rho.component_id[f(x)]
            for k in range(3 * n):
                assert iterate(f, x, k, rho) == iterate(f, x, k)
        for c, cyc in enumerate(rho.cycles):
            for y in cyc:
                assert iterate(f, y, rho.cycle_len[c]) == y


@pytest.mark.parametrize("seed", range(40))
def test_components_are_orbit_meeting_classes(seed):
    f = gen_random(1 + seed % 12, seed)
    rho = rho_decompose(f)
    for x in range(f.n):
        for y in range(f.n):
            same = rho.component_id[x] == rho.component_id[y]
            assert same == brute_orbits_meet(f.succ, x, y)
    # one cycle per component on a finite set
    assert rho.n_components == rho.n_cycles


def test_product_map_is_pairwise():
    f = load_map([1, 2, 0, 0])
    f2 = product_map(f)
    for x in range(4):
        for y in range(4):
            assert f2(x * 4 + y) == f(x) * 4 + f(y)
