import random

import pytest

from conftest import field, prime_powers
from pellfq import (
    ConicPoint,
    ProjPoint2,
    brute_force_conic,
    check_element_orders,
    conic_contains,
    conic_enumerate_proj,
    conic_enumerate_solutions,
    conic_inverse,
    conic_mul,
    conic_norm,
    conic_order,
    conic_params,
    phi,
    phi_inv,
)

ALL_ODD = prime_powers(31, odd_only=True)


def params(p, k, d):
    return conic_params(field(p, k), d)


def test_params_validation():
    with pytest.raises(ValueError):
        params(7, 1, 0)
    with pytest.raises(ValueError):
        params(2, 3, 1)  # characteristic 2 rejected
    assert params(7, 1, 3).sqrt_d is None
    assert params(7, 1, 2).sqrt_d == 3


def test_mul_goldens():
    P = params(7, 1, 3)
    assert conic_mul(P, ConicPoint(1, 0), ConicPoint(5, 2)) == (5, 2)
    assert conic_mul(P, ConicPoint(2, 1), ConicPoint(2, 1)) == (0, 4)
    # [0:1] * [0:1] = [d:0] which canonicalizes to the identity
    assert conic_mul(P, ProjPoint2(0, 1), ProjPoint2(0, 1)) == (1, 0)
    with pytest.raises(TypeError):
        conic_mul(P, ConicPoint(2, 1), ProjPoint2(2, 1))


def test_inverse_goldens():
    P = params(7, 1, 3)
    assert conic_inverse(P, ConicPoint(5, 2)) == (5, 5)
    assert conic_inverse(P, ConicPoint(1, 0)) == (1, 0)
    assert conic_inverse(P, ConicPoint(0, 4)) == (0, 3)
    # [5:-1] is the class [2:1] in canonical form
    assert conic_inverse(P, ProjPoint2(5, 1)) == (2, 1)
    assert conic_inverse(P, ProjPoint2(1, 0)) == (1, 0)


def test_norm_goldens():
    P = params(7, 1, 3)
    assert conic_norm(P, 1, 0) == 1
    assert conic_norm(P, 2, 1) == 1
    P2 = params(7, 1, 2)
    assert conic_norm(P2, 3, 1) == 0  # 3 is a square root of 2


def test_order_goldens():
    assert conic_order(params(7, 1, 3)) == 8
    assert conic_order(params(7, 1, 2)) == 6
    assert conic_order(params(13, 1, 1)) == 12


def test_phi_goldens():
    P = params(7, 1, 3)
    assert phi(P, ProjPoint2(1, 0)) == (1, 0)
    assert phi(P, ProjPoint2(0, 1)) == (6, 0)
    assert phi(P, ProjPoint2(2, 1)) == (0, 4)
    with pytest.raises(ValueError):
        phi(params(7, 1, 2), ProjPoint2(3, 1))  # zero norm


def test_phi_inv_goldens():
    P = params(7, 1, 3)
    assert phi_inv(P, ConicPoint(1, 0)) == (1, 0)
    assert phi_inv(P, ConicPoint(6, 0)) == (0, 1)
    # the class of [x+1 : y] = [1 : 4], canonically [2 : 1]
    assert phi_inv(P, ConicPoint(0, 4)) == (2, 1)
    assert phi(P, ProjPoint2(2, 1)) == (0, 4)


def test_enumerate_counts_goldens():
    assert len(list(conic_enumerate_proj(params(7, 1, 3)))) == 8
    classes = list(conic_enumerate_proj(params(7, 1, 2)))
    assert len(classes) == 6
    assert ProjPoint2(3, 1) not in classes and ProjPoint2(4, 1) not in classes
    assert len(list(conic_enumerate_proj(params(3, 1, 2)))) == 4


@pytest.mark.parametrize("p,k", ALL_ODD)
def test_enumeration_matches_brute_force(p, k):
    f = field(p, k)
    for d in range(1, f.q):
        P = conic_params(f, d)
        sols = list(conic_enumerate_solutions(P))
        assert len(sols) == len(set(sols)) == conic_order(P)
        assert all(conic_contains(P, *pt) for pt in sols)
        assert set(sols) == brute_force_conic(f, d).points


@pytest.mark.parametrize("p,k", ALL_ODD)
def test_phi_bijection_and_homomorphism_exhaustive(p, k):
    f = field(p, k)
    for d in range(1, f.q):
        P = conic_params(f, d)
        classes = list(conic_enumerate_proj(P))
        images = {c: phi(P, c) for c in classes}
        for c, pt in images.items():
            assert phi_inv(P, pt) == c
        for pt in images.values():
            assert phi(P, phi_inv(P, pt)) == pt
        for i, a in enumerate(classes):
            for b in classes[i:]:
                assert phi(P, conic_mul(P, a, b)) == \
                    conic_mul(P, images[a], images[b])


@pytest.mark.parametrize("p,k", ALL_ODD)
def test_group_axioms(p, k):
    f = field(p, k)
    rng = random.Random(f.q)
    for d in range(1, f.q):
        P = conic_params(f, d)
        sols = list(conic_enumerate_solutions(P))
        classes = list(conic_enumerate_proj(P))
        ident_pt, ident_cls = ConicPoint(1, 0), ProjPoint2(1, 0)
        for pt in sols:
            assert conic_mul(P, pt, ident_pt) == pt
            assert conic_mul(P, pt, conic_inverse(P, pt)) == ident_pt
        for c in classes:
            assert conic_mul(P, c, ident_cls) == c
            assert conic_mul(P, c, conic_inverse(P, c)) == ident_cls
        for _ in range(25):
            a, b, c = (rng.choice(sols) for _ in range(3))
            assert conic_mul(P, a, b) == conic_mul(P, b, a)
            assert conic_mul(P, conic_mul(P, a, b), c) == \
                conic_mul(P, a, conic_mul(P, b, c))
            u, v, w = (rng.choice(classes) for _ in range(3))
            assert conic_mul(P, u, v) == conic_mul(P, v, u)
            assert conic_mul(P, conic_mul(P, u, v), w) == \
                conic_mul(P, u, conic_mul(P, v, w))


def test_norm_multiplicative_on_ring_elements():
    rng = random.Random(99)
    for (p, k) in [(7, 1), (13, 1), (3, 2), (31, 1), (5, 2)]:
        f = field(p, k)
        for d in range(1, min(f.q, 8)):
            P = conic_params(f, d)
            for _ in range(200):
                m1, n1, m2, n2 = (rng.randrange(f.q) for _ in range(4))
                x, y = (f.add(f.mul(m1, m2), f.mul(d, f.mul(n1, n2))),
                        f.add(f.mul(m1, n2), f.mul(n1, m2)))
                assert conic_norm(P, x, y) == \
                    f.mul(conic_norm(P, m1, n1), conic_norm(P, m2, n2))


@pytest.mark.parametrize("p,k", ALL_ODD)
def test_cyclic_generator_exists(p, k):
    f = field(p, k)
    for d in range(1, f.q):
        report = check_element_orders(conic_params(f, d))
        assert report.structure == "cyclic"
        assert report.order == conic_order(conic_params(f, d))
