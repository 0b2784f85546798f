"""Independent ground truth for the conic and cubic groups.

Everything here is deliberately dumb: exhaustive scans of F_q^2 / F_q^3
for the solution sets, trial-division factoring, and direct verification
of the factor-coordinate changes and order claims.  None of it touches
the projectivization or the parameterization maps, so it can falsify
them.
"""

from __future__ import annotations

from typing import NamedTuple, Union

from .conic import ConicParams, ConicPoint, conic_mul, conic_order
from .cubic import CubicParams, CubicPoint, GroupOrderReport, cubic_mul, cubic_order
from .field import CubeKind, Field

__all__ = [
    "MAX_CONIC_Q",
    "MAX_CUBIC_Q",
    "SolutionSet",
    "brute_force_conic",
    "brute_force_cubic",
    "check_crt_split",
    "check_element_orders",
]

MAX_CONIC_Q = 1 << 12
MAX_CUBIC_Q = 1 << 8


class SolutionSet(NamedTuple):
    """Exhaustively computed solutions for one parameter value."""

    field: Field
    parameter: int
    points: frozenset


def brute_force_conic(field: Field, d: int) -> SolutionSet:
    """All (x, y) with x^2 - d*y^2 = 1, by scanning squares."""
    if field.q > MAX_CONIC_Q:
        raise ValueError(f"conic brute force capped at q = {MAX_CONIC_Q}")
    if field.p == 2:
        raise ValueError("the conic requires odd characteristic")
    field._check(d)
    if d == 0:
        raise ValueError("conic parameter d must be nonzero")
    add, mul = field.add, field.mul
    squares: dict[int, list[int]] = {}
    for x in range(field.q):
        squares.setdefault(mul(x, x), []).append(x)
    pts = set()
    for y in range(field.q):
        want = add(1, mul(d, mul(y, y)))
        for x in squares.get(want, ()):
            pts.add(ConicPoint(x, y))
    return SolutionSet(field, d, frozenset(pts))


def brute_force_cubic(field: Field, r: int) -> SolutionSet:
    """All (x, y, z) with x^3 - 3r*xyz + r*y^3 + r^2*z^3 = 1, by full scan."""
    if field.q > MAX_CUBIC_Q:
        raise ValueError(f"cubic brute force capped at q = {MAX_CUBIC_Q}")
    field._check(r)
    if r == 0:
        raise ValueError("cubic parameter r must be nonzero")
    q = field.q
    add, mul, sub = field.add, field.mul, field.sub
    cubes = [mul(a, mul(a, a)) for a in range(q)]
    r2 = mul(r, r)
    three_r = mul(field.from_int(3), r)
    r2cube = [mul(r2, c) for c in cubes]
    pts = set()
    for x in range(q):
        cx = cubes[x]
        for y in range(q):
            base = add(cx, mul(r, cubes[y]))
            coef = mul(three_r, mul(x, y))
            if coef == 0:
                for z in range(q):
                    if add(base, r2cube[z]) == 1:
                        pts.add(CubicPoint(x, y, z))
            else:
                for z in range(q):
                    if sub(add(base, r2cube[z]), mul(coef, z)) == 1:
                        pts.add(CubicPoint(x, y, z))
    return SolutionSet(field, r, frozenset(pts))


_Params = Union[ConicParams, CubicParams]


def check_crt_split(params: _Params) -> bool:
    """Verify the factor-coordinate change is a bijection, exhaustively.

    For a conic with square d (root s): (x, y) <-> u = x - s*y, where
    v = x + s*y satisfies u*v = 1 and x = (v+u)/2, y = (v-u)/(2s).  For a
    cubic whose r has three roots: (x, y, z) <-> (u, v), the evaluations
    at the twisted roots, with u*v*w = 1, x = (w+v+u)/3,
    y = (w + omega*v + omega^2*u)/(3s), z = (w + omega^2*v + omega*u)/(3s^2).
    Returns True only if both directions land where they should and cover
    everything.
    """
    if isinstance(params, ConicParams):
        return _conic_crt(params)
    if isinstance(params, CubicParams):
        return _cubic_crt(params)
    raise TypeError(f"unsupported parameter object {params!r}")


def _conic_crt(params: ConicParams) -> bool:
    s = params.sqrt_d
    if s is None:
        raise ValueError("the factor split needs d to be a square")
    F = params.field
    sols = brute_force_conic(F, params.d).points
    inv2 = F.inv(F.from_int(2))
    seen = set()
    for (x, y) in sols:
        u = F.sub(x, F.mul(s, y))
        v = F.add(x, F.mul(s, y))
        if u == 0 or F.mul(u, v) != 1:
            return False
        seen.add(u)
    if seen != set(range(1, F.q)):
        return False
    for u in range(1, F.q):
        v = F.inv(u)
        x = F.mul(F.add(v, u), inv2)
        y = F.mul(F.sub(v, u), F.inv(F.mul(F.from_int(2), s)))
        if ConicPoint(x, y) not in sols:
            return False
        if F.sub(x, F.mul(s, y)) != u:
            return False
    return True


def _cubic_crt(params: CubicParams) -> bool:
    if params.cube.kind is not CubeKind.THREE_ROOTS:
        raise ValueError("the factor split needs r to be a cube with "
                         "three roots in the field")
    F, s = params.field, params.s
    w1 = F.omega
    w2 = F.mul(w1, w1)
    s2 = F.mul(s, s)
    sols = brute_force_cubic(F, params.r).points

    def forward(x, y, z):
        u = F.add(x, F.add(F.mul(F.mul(w1, s), y), F.mul(F.mul(w2, s2), z)))
        v = F.add(x, F.add(F.mul(F.mul(w2, s), y), F.mul(F.mul(w1, s2), z)))
        w = F.add(x, F.add(F.mul(s, y), F.mul(s2, z)))
        return u, v, w

    inv3 = F.inv(F.from_int(3))
    inv3s = F.inv(F.mul(F.from_int(3), s))
    inv3s2 = F.inv(F.mul(F.from_int(3), s2))
    seen = set()
    for (x, y, z) in sols:
        u, v, w = forward(x, y, z)
        if u == 0 or v == 0 or F.mul(u, F.mul(v, w)) != 1:
            return False
        seen.add((u, v))
    q = F.q
    if len(seen) != len(sols) or len(sols) != (q - 1) ** 2:
        return False
    for u in range(1, q):
        for v in range(1, q):
            w = F.inv(F.mul(u, v))
            x = F.mul(F.add(w, F.add(v, u)), inv3)
            y = F.mul(F.add(w, F.add(F.mul(w1, v), F.mul(w2, u))), inv3s)
            z = F.mul(F.add(w, F.add(F.mul(w2, v), F.mul(w1, u))), inv3s2)
            if CubicPoint(x, y, z) not in sols:
                return False
            if forward(x, y, z) != (u, v, w):
                return False
    return True


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _group_pow(mul, identity, pt, e):
    acc = identity
    while e:
        if e & 1:
            acc = mul(acc, pt)
        pt = mul(pt, pt)
        e >>= 1
    return acc


def check_element_orders(params: _Params) -> GroupOrderReport:
    """Confirm the order/structure claims on the brute-force solution set.

    Cyclic cases must exhibit an element of full order; the product case
    must satisfy pt^(q-1) = identity everywhere.  Raises ValueError if
    the group contradicts its claim, otherwise returns the report.
    """
    if isinstance(params, ConicParams):
        order = conic_order(params)
        report = GroupOrderReport(order, "cyclic", (order,))
        sols = brute_force_conic(params.field, params.d).points
        identity = ConicPoint(1, 0)
        mul = lambda a, b: conic_mul(params, a, b)
    elif isinstance(params, CubicParams):
        report = cubic_order(params)
        sols = brute_force_cubic(params.field, params.r).points
        identity = CubicPoint(1, 0, 0)
        mul = lambda a, b: cubic_mul(params, a, b)
    else:
        raise TypeError(f"unsupported parameter object {params!r}")

    if len(sols) != report.order:
        raise ValueError(f"solution count {len(sols)} differs from the "
                         f"claimed order {report.order}")

    if report.structure == "product":
        e = params.field.q - 1
        for pt in sols:
            if _group_pow(mul, identity, pt, e) != identity:
                raise ValueError(f"{pt} does not satisfy pt^{e} = identity")
        return report

    n = report.order
    primes = list(_factorize(n))
    max_order = 1
    for pt in sols:
        o = n
        for pr in primes:
            while o % pr == 0 and _group_pow(mul, identity, pt, o // pr) == identity:
                o //= pr
        if o > max_order:
            max_order = o
            if max_order == n:
                break
    if report.structure == "cyclic" and max_order != n:
        raise ValueError(f"no element of order {n}; maximum seen is {max_order}")
    return report
