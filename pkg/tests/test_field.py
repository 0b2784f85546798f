import random

import pytest

from conftest import field, prime_powers
from pellfq import CubeKind, Field, is_prime


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert not is_prime(7 * 11)
    assert is_prime(2 ** 19 - 1)


def test_omega_presence_and_choice():
    f7 = field(7)
    assert f7.omega in (2, 4)
    assert f7.omega == 2  # the smaller primitive cube root is pinned
    assert field(11).omega is None
    assert field(13).omega == 3
    # q = 0 (mod 3): no primitive cube root of unity exists
    assert field(3, 2).omega is None
    assert field(3).omega is None
    assert field(2, 2).omega == 2


def test_default_moduli():
    assert field(3, 2).modulus == (1, 0, 1)
    assert field(2, 2).modulus == (1, 1, 1)
    assert field(2, 3).modulus == (1, 1, 0, 1)
    assert field(5).modulus == (0, 1)


def test_field_construction_errors():
    with pytest.raises(ValueError):
        Field(9)
    with pytest.raises(ValueError):
        Field(1)
    with pytest.raises(ValueError):
        Field(5, 0)
    with pytest.raises(ValueError):
        Field(3, 2, [2, 0, 1])  # t^2 - 1 factors
    with pytest.raises(ValueError):
        Field(3, 2, [1, 1])  # wrong degree
    with pytest.raises(ValueError):
        Field(3, 2, [1, 0, 2])  # not monic
    with pytest.raises(ValueError):
        Field(3, 2, [4, 0, 1])  # coefficient out of range


def test_arithmetic_goldens():
    f7, f13 = field(7), field(13)
    assert f7.inv(3) == 5
    assert f13.pow(5, 4) == 1
    for f in (f7, f13, field(3, 2), field(2, 3)):
        for a in range(1, f.q):
            assert f.pow(a, 0) == 1


def test_inversion_of_zero():
    with pytest.raises(ZeroDivisionError):
        field(7).inv(0)
    with pytest.raises(ZeroDivisionError):
        field(3, 2).inv(0)
    with pytest.raises(ZeroDivisionError):
        field(7).pow(0, -1)


@pytest.mark.parametrize("p,k", [(7, 1), (13, 1), (3, 2), (2, 3), (5, 2), (3, 3)])
def test_field_axioms_random(p, k):
    f = field(p, k)
    rng = random.Random(1000 * p + k)
    for _ in range(300):
        a = rng.randrange(1, f.q)
        b = rng.randrange(1, f.q)
        e = rng.randrange(f.q)
        assert f.mul(f.inv(a), a) == 1
        assert f.pow(f.mul(a, b), e) == f.mul(f.pow(a, e), f.pow(b, e))
        assert f.sub(f.add(a, b), b) == a
        assert f.mul(a, f.add(b, 1)) == f.add(f.mul(a, b), a)


def test_square_goldens():
    f7 = field(7)
    assert f7.is_square(2) and f7.sqrt(2) in (3, 4)
    assert not f7.is_square(3) and f7.sqrt(3) is None
    f13 = field(13)
    assert f13.is_square(1) and f13.sqrt(1) in (1, 12)


@pytest.mark.parametrize("p,k", prime_powers(121, odd_only=True))
def test_square_classification_exhaustive(p, k):
    f = field(p, k)
    squares = {f.mul(x, x) for x in range(1, f.q)}
    for d in range(1, f.q):
        assert f.is_square(d) == (d in squares)
        root = f.sqrt(d)
        if d in squares:
            assert root is not None and f.mul(root, root) == d
        else:
            assert root is None


def test_square_rejects_char2():
    with pytest.raises(ValueError):
        field(2, 2).is_square(1)
    with pytest.raises(ValueError):
        field(2, 3).sqrt(1)
    with pytest.raises(ValueError):
        field(7).is_square(0)


def test_tonelli_shanks_large_prime():
    f = field(2 ** 31 - 1)  # q above the exhaustive-search cap
    rng = random.Random(5)
    for _ in range(20):
        a = rng.randrange(1, f.q)
        d = f.mul(a, a)
        root = f.sqrt(d)
        assert root is not None and f.mul(root, root) == d


def test_cube_goldens():
    assert field(7).classify_cube(2).kind is CubeKind.NON_CUBE
    cls = field(13).classify_cube(5)
    assert cls.kind is CubeKind.THREE_ROOTS and cls.roots == (7, 8, 11)
    cls = field(11).classify_cube(9)
    assert cls.kind is CubeKind.ONE_ROOT and cls.roots == (4,)
    cls = field(3, 2).classify_cube(2)
    assert cls.kind is CubeKind.CHAR3 and cls.roots == (2,)
    with pytest.raises(ValueError):
        field(7).classify_cube(0)


@pytest.mark.parametrize("p,k", prime_powers(121))
def test_cube_classification_exhaustive(p, k):
    f = field(p, k)
    cubes: dict[int, set[int]] = {}
    for x in range(f.q):
        cubes.setdefault(f.mul(x, f.mul(x, x)), set()).add(x)
    for r in range(1, f.q):
        cls = f.classify_cube(r)
        assert set(cls.roots) == cubes.get(r, set())
        if cls.kind is CubeKind.NON_CUBE:
            assert f.q % 3 == 1
        elif cls.kind is CubeKind.THREE_ROOTS:
            assert f.q % 3 == 1 and len(cls.roots) == 3
        elif cls.kind is CubeKind.ONE_ROOT:
            assert f.q % 3 == 2 and len(cls.roots) == 1
        else:
            assert p == 3 and len(cls.roots) == 1


@pytest.mark.parametrize("p,k", prime_powers(121))
def test_omega_is_primitive_cube_root(p, k):
    f = field(p, k)
    if f.q % 3 != 1:
        assert f.omega is None
        return
    w = f.omega
    assert w is not None and w != 1
    assert f.mul(w, f.mul(w, w)) == 1
    if p != 3:
        assert f.add(f.add(f.mul(w, w), w), 1) == 0


def test_element_text_roundtrip():
    f7, f9 = field(7), field(3, 2)
    assert f7.format_element(5) == "5"
    assert f7.parse_element("5") == 5
    assert f9.format_element(f9.element([1, 2])) == "1,2"
    assert f9.parse_element("1,2") == f9.element([1, 2])
    assert f9.parse_element("2") == 2  # short form pads high coefficients
    with pytest.raises(ValueError):
        f7.parse_element("1,2")
    with pytest.raises(ValueError):
        f7.parse_element("x")
    with pytest.raises(ValueError):
        f9.parse_element("1,2,0")
    with pytest.raises(ValueError):
        f9.parse_element("3,0")


def test_coeffs_roundtrip():
    f = field(3, 3)
    for a in range(f.q):
        assert f.element(f.coeffs_of(a)) == a
    with pytest.raises(ValueError):
        f.coeffs_of(f.q)
