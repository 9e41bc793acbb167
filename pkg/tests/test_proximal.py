import pytest

from primaldyn.errors import CertificateFailure
from primaldyn.fgraph import gen_mod_mul, gen_random, iterate, load_map
from primaldyn.pointset import PointSet
from primaldyn.proximal import (
    PairRelation,
    base_entourage,
    is_ay_chaotic,
    is_d_chaotic,
    is_sensitive,
    orbital_relation,
    prox_asym_syprox,
    stability_check,
    stability_set,
    triangle_relation,
    triangle_witness,
)
from primaldyn.topology import minimal_opens


def full(n):
    return PairRelation(n, tuple([(1 << n) - 1] * n))


def test_base_entourage_examples():
    assert base_entourage(load_map([0, 1, 2])).pairs() == [(0, 0), (1, 1), (2, 2)]
    assert base_entourage(load_map([1, 2, 0])) == full(3)
    assert base_entourage(load_map([0, 0, 1])).pairs() == [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]


@pytest.mark.parametrize("seed", range(30))
def test_stability_certificate(seed):
    f = gen_random(1 + seed % 12, seed)
    cert = stability_check(f)
    assert len(cert) == f.n
    V = minimal_opens(f)
    for x in range(f.n):
        assert V[x].issubset(cert.stability_sets[x])


def test_stability_sets_by_definition():
    f = gen_random(9, 5)
    V = minimal_opens(f)
    for x in range(f.n):
        expect = PointSet.of(f.n, (y for y in range(f.n)
                                   if all(iterate(f, y, k) in V[iterate(f, x, k)] for k in range(40))))
        assert stability_set(f, x) == expect


def test_certificate_failure_is_an_error_type():
    assert issubclass(CertificateFailure, AssertionError)


@pytest.mark.parametrize("f", [load_map([1, 2, 0]), gen_mod_mul(2, 255), load_map([0, 1, 2])],
                         ids=["3-cycle", "mod-mul-2-255", "identity"])
def test_never_sensitive(f):
    assert not is_sensitive(f)
    assert not is_ay_chaotic(f)
    assert not is_d_chaotic(f)


def test_triangle_examples():
    f = load_map([0, 0, 1])
    tri = triangle_relation(f)
    assert all((x, x) in tri for x in range(3))
    assert (1, 2) in tri and (2, 1) in tri
    assert (0, 1) not in triangle_relation(load_map([0, 1]))


@pytest.mark.parametrize("seed", range(40))
def test_triangle_against_bounded_search(seed):
    f = gen_random(1 + seed % 12, 200 + seed)
    n = f.n
    bound = 3 * n
    for x in range(n):
        for y in range(n):
            brute = any(iterate(f, x, m) == iterate(f, y, k)
                        for m in range(bound + 1) for k in range(m, bound + 1))
            w = triangle_witness(f, x, y)
            assert (w is not None) == brute
            if w:
                m, k = w
                assert m <= k and iterate(f, x, m) == iterate(f, y, k)


def test_prox_examples():
    # one component with a fixed point: everything proximal
    for rel in prox_asym_syprox(load_map([0, 0, 1])):
        assert rel == full(3)
    two = prox_asym_syprox(load_map([0, 1]))
    assert all(r.pairs() == [(0, 0), (1, 1)] for r in two)
    assert all(r == full(3) for r in prox_asym_syprox(load_map([1, 2, 0])))


@pytest.mark.parametrize("seed", range(60))
def test_proximal_relations_coincide(seed):
    f = gen_random(1 + seed % 12, 3300 + seed)
    prox, asym, syprox = prox_asym_syprox(f)
    tri = triangle_relation(f)
    sim = orbital_relation(f)
    assert asym == syprox == prox == tri
    assert tri.is_reflexive() and tri.is_transitive()
    assert sim == (tri | tri.inverse())
    assert asym.issubset(syprox) and syprox.issubset(prox)


def test_pair_relation_algebra():
    r = PairRelation.from_pairs(3, [(0, 1), (1, 2)])
    assert r.compose(r).pairs() == [(0, 2)]
    assert r.inverse().pairs() == [(1, 0), (2, 1)]
    assert len(r) == 2 and not r.is_reflexive()
