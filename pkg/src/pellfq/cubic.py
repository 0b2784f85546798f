"""The cubic Pell surface x^3 - 3r*xyz + r*y^3 + r^2*z^3 = 1 over F_q.

Solutions are the norm-one elements of F_q[t]/(t^3 - r) and form a
commutative group under the product inherited from the ring (identity
(1, 0, 0), inverse given by conjugation).  Projective classes [l : m : n]
of the invertible ring elements form a second group, and a class-specific
isomorphism maps it onto the solution set:

  * r not a cube  (q = 1 mod 3):  psi1, order q^2 + q + 1, cyclic
  * r a cube, three roots in F_q: psi2 / psi2_inv, order (q - 1)^2
  * r a cube, one root, q = 2 mod 3: psi3 / psi3_inv, order q^2 - 1, cyclic
  * characteristic 3:             psi3_char3, order q^2

Enumerating the classes (a two-parameter family plus a line and a point
at infinity, minus the explicit zero-norm classes) and mapping them over
yields every solution exactly once in O(q^2); psi2_inv / psi3_inv store a
solution in two coordinates instead of three.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Union

from .field import CubeClass, CubeKind, Field

__all__ = [
    "CubicParams",
    "CubicPoint",
    "GroupOrderReport",
    "ProjPoint3",
    "cubic_compress",
    "cubic_conjugate",
    "cubic_contains",
    "cubic_enumerate_solutions",
    "cubic_mul",
    "cubic_norm",
    "cubic_order",
    "cubic_params",
    "cubic_sample",
    "excluded_classes",
    "proj_enumerate",
    "psi",
    "psi1",
    "psi2",
    "psi2_inv",
    "psi3",
    "psi3_char3",
    "psi3_inv",
]


class CubicPoint(NamedTuple):
    x: int
    y: int
    z: int


class ProjPoint3(NamedTuple):
    """A projective class [l : m : n], canonicalized so the last nonzero
    coordinate is 1."""

    l: int
    m: int
    n: int


class GroupOrderReport(NamedTuple):
    """Order of the solution group and what is known of its shape."""

    order: int
    structure: str  # "cyclic" | "product" | "unspecified"
    factors: tuple[int, ...]


@dataclass(frozen=True)
class CubicParams:
    """A cubic instance: field, parameter r != 0, its cube classification,
    and the pinned root s (smallest in element order) when one exists.

    The maps psi2/psi2_inv and the zero-norm class descriptions depend on
    which root is fixed; pinning the smallest keeps every run reproducible.
    """

    field: Field
    r: int
    cube: CubeClass
    s: Optional[int]


def cubic_params(field: Field, r: int, root: Optional[int] = None) -> CubicParams:
    """Build an instance for r != 0, optionally fixing a specific cube root."""
    field._check(r)
    if r == 0:
        raise ValueError("cubic parameter r must be nonzero")
    cube = field.classify_cube(r)
    s = cube.roots[0] if cube.roots else None
    if root is not None:
        if root not in cube.roots:
            raise ValueError(f"{root} is not a cube root of {r}")
        s = root
    return CubicParams(field, r, cube, s)


_Pt = Union[CubicPoint, ProjPoint3]


def _ring_mul(params: CubicParams, a, b) -> tuple[int, int, int]:
    """Coordinate product inherited from F_q[t]/(t^3 - r)."""
    F, r = params.field, params.r
    x1, y1, z1 = a
    x2, y2, z2 = b
    x = F.add(F.mul(x1, x2), F.mul(r, F.add(F.mul(y1, z2), F.mul(z1, y2))))
    y = F.add(F.add(F.mul(x1, y2), F.mul(y1, x2)), F.mul(r, F.mul(z1, z2)))
    z = F.add(F.add(F.mul(x1, z2), F.mul(y1, y2)), F.mul(z1, x2))
    return x, y, z


def _canonical3(params: CubicParams, l: int, m: int, n: int) -> ProjPoint3:
    F = params.field
    if n != 0:
        i = F.inv(n)
        return ProjPoint3(F.mul(l, i), F.mul(m, i), 1)
    if m != 0:
        return ProjPoint3(F.mul(l, F.inv(m)), 1, 0)
    if l == 0:
        raise ValueError("[0 : 0 : 0] is not a projective class")
    return ProjPoint3(1, 0, 0)


def cubic_mul(params: CubicParams, a: _Pt, b: _Pt) -> _Pt:
    """Group product; two points or two classes, never mixed."""
    if type(a) is not type(b):
        raise TypeError("cannot mix affine points and projective classes")
    x, y, z = _ring_mul(params, a, b)
    if isinstance(a, ProjPoint3):
        return _canonical3(params, x, y, z)
    return CubicPoint(x, y, z)


def cubic_conjugate(params: CubicParams, a: _Pt) -> _Pt:
    """Conjugate (x^2 - r*yz, r*z^2 - xy, y^2 - xz): the group inverse of
    a solution, and of a projective class."""
    F, r = params.field, params.r
    x, y, z = a
    cx = F.sub(F.mul(x, x), F.mul(r, F.mul(y, z)))
    cy = F.sub(F.mul(r, F.mul(z, z)), F.mul(x, y))
    cz = F.sub(F.mul(y, y), F.mul(x, z))
    if isinstance(a, ProjPoint3):
        return _canonical3(params, cx, cy, cz)
    return CubicPoint(cx, cy, cz)


def cubic_norm(params: CubicParams, l: int, m: int, n: int) -> int:
    """The norm form l^3 - 3r*lmn + r*m^3 + r^2*n^3."""
    F, r = params.field, params.r
    cube = lambda a: F.mul(a, F.mul(a, a))
    t = F.add(cube(l), F.mul(r, cube(m)))
    t = F.add(t, F.mul(F.mul(r, r), cube(n)))
    triple = F.mul(F.from_int(3), F.mul(r, F.mul(l, F.mul(m, n))))
    return F.sub(t, triple)


def cubic_contains(params: CubicParams, x: int, y: int, z: int) -> bool:
    return cubic_norm(params, x, y, z) == 1


def cubic_order(params: CubicParams) -> GroupOrderReport:
    """Closed-form group order per cube class."""
    q = params.field.q
    kind = params.cube.kind
    if kind is CubeKind.NON_CUBE:
        n = q * q + q + 1
        return GroupOrderReport(n, "cyclic", (n,))
    if kind is CubeKind.THREE_ROOTS:
        return GroupOrderReport((q - 1) ** 2, "product", (q - 1, q - 1))
    if kind is CubeKind.ONE_ROOT:
        n = q * q - 1
        return GroupOrderReport(n, "cyclic", (n,))
    return GroupOrderReport(q * q, "unspecified", ())


def excluded_classes(params: CubicParams) -> frozenset[ProjPoint3]:
    """The zero-norm classes removed from the projectivization.

    Empty for a non-cube r.  For a cube with fixed root(s) t: the line
    classes [-t : 1 : 0] plus [-(m + t)t : m : 1] for every m; with a
    single root also [s^2 : s : 1] (in characteristic 3 that class
    coincides with the m = s member, so the set absorbs it).
    """
    F = params.field
    kind = params.cube.kind
    if kind is CubeKind.NON_CUBE:
        return frozenset()
    out = set()
    for t in params.cube.roots:
        out.add(ProjPoint3(F.neg(t), 1, 0))
        for m in range(F.q):
            out.add(ProjPoint3(F.neg(F.mul(F.add(m, t), t)), m, 1))
    if kind is not CubeKind.THREE_ROOTS:
        s = params.s
        out.add(ProjPoint3(F.mul(s, s), s, 1))
    return frozenset(out)


def proj_enumerate(params: CubicParams) -> Iterator[ProjPoint3]:
    """Every projective class exactly once, in a fixed order: [l : m : 1]
    with m outer and l inner, then [l : 1 : 0], then [1 : 0 : 0]."""
    q = params.field.q
    skip = excluded_classes(params)
    for m in range(q):
        for l in range(q):
            cls = ProjPoint3(l, m, 1)
            if cls not in skip:
                yield cls
    for l in range(q):
        cls = ProjPoint3(l, 1, 0)
        if cls not in skip:
            yield cls
    yield ProjPoint3(1, 0, 0)


def _require(params: CubicParams, kind: CubeKind, what: str) -> None:
    if params.cube.kind is not kind:
        raise ValueError(f"{what} applies to class {kind.value}, "
                         f"not {params.cube.kind.value}")


def _scaled(params: CubicParams, c: int, v) -> CubicPoint:
    F = params.field
    return CubicPoint(F.mul(c, v[0]), F.mul(c, v[1]), F.mul(c, v[2]))


def psi1(params: CubicParams, pt: ProjPoint3) -> CubicPoint:
    """Non-cube case: N(l,m,n)^((q-4)/3) * (l,m,n)^3.

    Any representative of the class gives the same point.
    """
    _require(params, CubeKind.NON_CUBE, "psi1")
    q = params.field.q
    assert (q - 4) % 3 == 0
    nrm = cubic_norm(params, *pt)
    if nrm == 0:
        raise ValueError("class has zero norm")
    c = params.field.pow(nrm, (q - 4) // 3)
    cubed = _ring_mul(params, _ring_mul(params, pt, pt), pt)
    return _scaled(params, c, cubed)


def psi2(params: CubicParams, pt: ProjPoint3) -> CubicPoint:
    """Three-roots case, with the fixed root s.

    Scale-invariant cubic polynomials in (l, m, n) over the norm; the
    three numerators sum to (l + s*m + s^2*n)^3.
    """
    _require(params, CubeKind.THREE_ROOTS, "psi2")
    F = params.field
    l, m, n = pt
    nrm = cubic_norm(params, l, m, n)
    if nrm == 0:
        raise ValueError("class has zero norm")
    A, M = F.add, F.mul
    two = F.from_int(2)
    s = params.s
    s2 = M(s, s)
    s4 = M(s2, s2)
    lm, ln, mn = M(l, m), M(l, n), M(m, n)
    l2, m2, n2 = M(l, l), M(m, m), M(n, n)
    cube = lambda a: M(a, M(a, a))

    num_x = A(A(cube(l), M(two, M(s2, M(l, A(A(m2, M(s, mn)), M(s2, n2)))))),
              M(s4, M(mn, A(m, M(s, n)))))
    num_y = A(A(M(s2, cube(m)), M(two, M(m, A(A(l2, M(s2, ln)), M(s4, n2))))),
              M(s, M(ln, A(l, M(s2, n)))))
    num_z = A(A(M(M(s4, s), cube(n)), M(two, M(M(s, n), A(A(l2, M(s, lm)), M(s2, m2))))),
              M(lm, A(l, M(s, m))))

    i = F.inv(nrm)
    return CubicPoint(M(num_x, i), M(num_y, i), M(num_z, F.inv(M(s, nrm))))


def psi2_inv(params: CubicParams, pt: CubicPoint) -> ProjPoint3:
    """Inverse of psi2: the canonical class of
    [s^2(1+2x-sy-s^2 z) : s(1-x+2sy-s^2 z) : 1-x-sy+2s^2 z]."""
    _require(params, CubeKind.THREE_ROOTS, "psi2_inv")
    F = params.field
    x, y, z = pt
    A, M, N = F.add, F.mul, F.neg
    two = F.from_int(2)
    s = params.s
    s2 = M(s, s)
    sy, s2z = M(s, y), M(s2, z)
    ca = A(A(1, M(two, x)), N(A(sy, s2z)))
    cb = A(A(1, N(x)), A(M(two, sy), N(s2z)))
    cc = A(A(1, N(x)), A(N(sy), M(two, s2z)))
    return _canonical3(params, M(s2, ca), M(s, cb), cc)


def psi3(params: CubicParams, pt: ProjPoint3) -> CubicPoint:
    """One-root case (q = 2 mod 3): N(l,m,n)^((q-2)/3) * (l,m,n)."""
    _require(params, CubeKind.ONE_ROOT, "psi3")
    q = params.field.q
    assert (q - 2) % 3 == 0
    nrm = cubic_norm(params, *pt)
    if nrm == 0:
        raise ValueError("class has zero norm")
    c = params.field.pow(nrm, (q - 2) // 3)
    return _scaled(params, c, pt)


def psi3_inv(params: CubicParams, pt: CubicPoint) -> ProjPoint3:
    """Inverse of psi3: plain projectivization of the point."""
    _require(params, CubeKind.ONE_ROOT, "psi3_inv")
    return _canonical3(params, *pt)


def psi3_char3(params: CubicParams, pt: ProjPoint3) -> CubicPoint:
    """Characteristic-3 case: N(l,m,n)^(q/3 - 1) * (l,m,n)^2."""
    _require(params, CubeKind.CHAR3, "psi3_char3")
    q = params.field.q
    nrm = cubic_norm(params, *pt)
    if nrm == 0:
        raise ValueError("class has zero norm")
    c = params.field.pow(nrm, q // 3 - 1)
    return _scaled(params, c, _ring_mul(params, pt, pt))


_PSI = {
    CubeKind.NON_CUBE: psi1,
    CubeKind.THREE_ROOTS: psi2,
    CubeKind.ONE_ROOT: psi3,
    CubeKind.CHAR3: psi3_char3,
}


def psi(params: CubicParams, pt: ProjPoint3) -> CubicPoint:
    """The class-appropriate isomorphism from classes to solutions."""
    return _PSI[params.cube.kind](params, pt)


def cubic_enumerate_solutions(params: CubicParams) -> Iterator[CubicPoint]:
    """Every solution exactly once: the psi-image of the classes."""
    f = _PSI[params.cube.kind]
    for cls in proj_enumerate(params):
        yield f(params, cls)


def cubic_sample(params: CubicParams, rng: Union[random.Random, int]) -> CubicPoint:
    """One uniformly random solution.

    Draws a uniform candidate among all q^2 + q + 1 canonical class
    shapes, rejects the zero-norm ones (at most (q+2)/q^2 of them), and
    maps the survivor through psi.  Deterministic for a given generator
    state or seed.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    q = params.field.q
    total = q * q + q + 1
    while True:
        i = rng.randrange(total)
        if i < q * q:
            cand = ProjPoint3(i % q, i // q, 1)
        elif i < q * q + q:
            cand = ProjPoint3(i - q * q, 1, 0)
        else:
            cand = ProjPoint3(1, 0, 0)
        if cubic_norm(params, *cand) != 0:
            return psi(params, cand)


def cubic_compress(params: CubicParams, pt: CubicPoint) -> ProjPoint3:
    """Two-thirds-size representation of a solution: its class under the
    explicit inverse map.  Only the cube cases with q not a power of 3
    have one."""
    kind = params.cube.kind
    if kind is CubeKind.THREE_ROOTS:
        return psi2_inv(params, pt)
    if kind is CubeKind.ONE_ROOT:
        return psi3_inv(params, pt)
    raise ValueError(f"compression is not available for class {kind.value}")
