"""The Pell conic x^2 - d*y^2 = 1 over F_q.

Solutions form a commutative group under the Brahmagupta product, with
identity (1, 0).  The same product acts on projective classes [m : n] of
the quadratic extension ring, and the two groups are identified by an
explicit isomorphism ``phi`` (with inverse ``phi_inv``), which is what
makes counting and full enumeration cheap: list the classes, map them
over.

Affine points and projective classes are small NamedTuples of canonical
field elements; every function here is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Union

from .field import Field

__all__ = [
    "ConicParams",
    "ConicPoint",
    "ProjPoint2",
    "conic_contains",
    "conic_enumerate_proj",
    "conic_enumerate_solutions",
    "conic_inverse",
    "conic_mul",
    "conic_norm",
    "conic_order",
    "conic_params",
    "phi",
    "phi_inv",
]


class ConicPoint(NamedTuple):
    x: int
    y: int


class ProjPoint2(NamedTuple):
    """A projective class [m : n], canonicalized to n = 1 or to the point
    at infinity [1 : 0]."""

    m: int
    n: int


@dataclass(frozen=True)
class ConicParams:
    """A conic instance: the field, the parameter d != 0, and a square
    root of d when one exists (then [s : 1] and [-s : 1] are the zero-norm
    classes and the group has order q - 1 instead of q + 1)."""

    field: Field
    d: int
    sqrt_d: Optional[int]


def conic_params(field: Field, d: int) -> ConicParams:
    if field.p == 2:
        raise ValueError("the conic requires odd characteristic")
    field._check(d)
    if d == 0:
        raise ValueError("conic parameter d must be nonzero")
    return ConicParams(field, d, field.sqrt(d))


_Pt = Union[ConicPoint, ProjPoint2]


def _canonical2(params: ConicParams, m: int, n: int) -> ProjPoint2:
    F = params.field
    if n != 0:
        return ProjPoint2(F.mul(m, F.inv(n)), 1)
    if m == 0:
        raise ValueError("[0 : 0] is not a projective class")
    return ProjPoint2(1, 0)


def conic_mul(params: ConicParams, a: _Pt, b: _Pt) -> _Pt:
    """Brahmagupta product; works on two points or two classes alike."""
    if type(a) is not type(b):
        raise TypeError("cannot mix affine points and projective classes")
    F, d = params.field, params.d
    x = F.add(F.mul(a[0], b[0]), F.mul(d, F.mul(a[1], b[1])))
    y = F.add(F.mul(a[0], b[1]), F.mul(a[1], b[0]))
    if isinstance(a, ProjPoint2):
        return _canonical2(params, x, y)
    return ConicPoint(x, y)


def conic_inverse(params: ConicParams, a: _Pt) -> _Pt:
    """Group inverse: negate the t-coefficient (conjugation)."""
    F = params.field
    if isinstance(a, ProjPoint2):
        return _canonical2(params, a.m, F.neg(a.n))
    return ConicPoint(a.x, F.neg(a.y))


def conic_norm(params: ConicParams, m: int, n: int) -> int:
    F = params.field
    return F.sub(F.mul(m, m), F.mul(params.d, F.mul(n, n)))


def conic_contains(params: ConicParams, x: int, y: int) -> bool:
    return conic_norm(params, x, y) == 1


def conic_order(params: ConicParams) -> int:
    """q + 1 when d is a non-square, q - 1 when it is a square."""
    q = params.field.q
    return q - 1 if params.sqrt_d is not None else q + 1


def phi(params: ConicParams, pt: ProjPoint2) -> ConicPoint:
    """Map a class [m : n] to the conic point it parameterizes.

    Accepts any representative (the formula is invariant under scaling);
    the class must have nonzero norm.
    """
    F, d = params.field, params.d
    m, n = pt
    nrm = conic_norm(params, m, n)
    if nrm == 0:
        raise ValueError("class has zero norm")
    i = F.inv(nrm)
    num_x = F.add(F.mul(m, m), F.mul(d, F.mul(n, n)))
    num_y = F.mul(F.from_int(2), F.mul(m, n))
    return ConicPoint(F.mul(num_x, i), F.mul(num_y, i))


def phi_inv(params: ConicParams, pt: ConicPoint) -> ProjPoint2:
    """Inverse of ``phi``, returned in canonical form.

    (x, y) goes to the class of [x + 1 : y], except (-1, 0) which goes to
    [0 : 1].
    """
    F = params.field
    x, y = pt
    if y == 0 and x == F.neg(1):
        return ProjPoint2(0, 1)
    return _canonical2(params, F.add(x, 1), y)


def conic_enumerate_proj(params: ConicParams) -> Iterator[ProjPoint2]:
    """All projective classes: [m : 1] for each admissible m (skipping
    the two square roots of d when they exist), then [1 : 0]."""
    excluded = ()
    if params.sqrt_d is not None:
        excluded = (params.sqrt_d, params.field.neg(params.sqrt_d))
    for m in range(params.field.q):
        if m not in excluded:
            yield ProjPoint2(m, 1)
    yield ProjPoint2(1, 0)


def conic_enumerate_solutions(params: ConicParams) -> Iterator[ConicPoint]:
    """Every solution exactly once: the image of the classes under phi."""
    for cls in conic_enumerate_proj(params):
        yield phi(params, cls)
