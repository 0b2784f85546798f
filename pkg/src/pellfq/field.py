"""Exact arithmetic in finite fields F_q with q = p^k.

An element of F_q is a plain int in [0, q): the base-p encoding
c0 + c1*p + ... + c_{k-1}*p^(k-1) of its coefficient vector over F_p
(low degree first).  Prime-field elements are therefore ordinary
residues, and every element has exactly one representation, so elements
are hashable and set-friendly, which the enumeration and oracle layers
rely on.

A Field is immutable after construction and all operations are pure
functions of their arguments; contexts and elements may be shared freely
between threads.
"""

from __future__ import annotations

import enum
from typing import NamedTuple, Optional, Sequence

__all__ = ["CubeClass", "CubeKind", "Field", "is_prime"]

# Extension fields up to this size get full add/mul lookup tables (built
# lazily); beyond it each operation falls back to polynomial arithmetic.
_TABLE_MAX_Q = 256
# Exhaustive element scans (square/cube root search) allowed up to here.
_SEARCH_MAX_Q = 1 << 16
# One residue product must stay within 64 bits.
_MAX_P = (1 << 31) - 1


def is_prime(n: int) -> bool:
    """Deterministic primality test by trial division (n < 2**31)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (coefficient lists, low degree first)

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return _ptrim(out)


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo a monic polynomial f."""
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        c = a[-1]
        if c:
            shift = len(a) - 1 - df
            for i in range(df):
                a[shift + i] = (a[shift + i] - c * f[i]) % p
        a.pop()
    return _ptrim(a)


def _psub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _ptrim(out)


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        lead = b[-1]
        if lead != 1:
            il = pow(lead, -1, p)
            b = [(c * il) % p for c in b]
        a, b = b, _pmod(a, b, p)
    return a


def _ppowmod(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    acc = _pmod(base, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, acc, p), f, p)
        acc = _pmod(_pmul(acc, acc, p), f, p)
        e >>= 1
    return result


def _is_irreducible(f: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic polynomial of degree >= 1 over F_p."""
    k = len(f) - 1
    if k == 1:
        return True
    x = [0, 1]
    if _ppowmod(x, p ** k, f, p) != x:
        return False
    for ell in _prime_divisors(k):
        h = _ppowmod(x, p ** (k // ell), f, p)
        g = _pgcd(f, _psub(h, x, p), p)
        if len(g) - 1 != 0:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree k, scanning low coefficients in
    base-p counting order (constant coefficient varies fastest)."""
    for idx in range(p ** k):
        coeffs = []
        a = idx
        for _ in range(k):
            a, c = divmod(a, p)
            coeffs.append(c)
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------


class CubeKind(enum.Enum):
    """The four cases for a nonzero element under cubing."""

    NON_CUBE = "non-cube"
    THREE_ROOTS = "cube-three-roots"
    ONE_ROOT = "cube-one-root"
    CHAR3 = "char3"


class CubeClass(NamedTuple):
    """Cube classification of an element together with all of its cube
    roots in the field (0, 3 or 1 of them)."""

    kind: CubeKind
    roots: tuple[int, ...]


class Field:
    """Arithmetic context for F_q, q = p^k.

    With no modulus given and k > 1, the first monic irreducible of
    degree k (in base-p counting order) is selected, so contexts are
    reproducible across runs.  ``omega`` holds the smaller of the two
    primitive cube roots of unity whenever q = 1 (mod 3), else None.
    """

    def __init__(self, p: int, k: int = 1,
                 modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if p > _MAX_P:
            raise ValueError(f"p must be below 2**31, got {p}")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.q = p ** k
        if modulus is None:
            self.modulus = (0, 1) if k == 1 else _smallest_irreducible(p, k)
        else:
            mod = tuple(int(c) for c in modulus)
            if len(mod) != k + 1 or mod[-1] != 1:
                raise ValueError("modulus must be monic of degree k")
            if any(not 0 <= c < p for c in mod[:-1]):
                raise ValueError("modulus coefficients must lie in [0, p)")
            if k > 1 and not _is_irreducible(list(mod), p):
                raise ValueError("modulus is reducible over F_p")
            self.modulus = mod
        self._mul_t: Optional[list[list[int]]] = None
        self._add_t: Optional[list[list[int]]] = None
        self._neg_t: Optional[list[int]] = None
        self._inv_t: Optional[list[int]] = None
        self.omega = self._find_omega() if self.q % 3 == 1 else None

    def __repr__(self) -> str:
        if self.k == 1:
            return f"Field({self.p})"
        return f"Field({self.p}, k={self.k}, modulus={self.format_modulus()!r})"

    # -- element encoding ---------------------------------------------------

    def coeffs_of(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (low degree first) of an element."""
        self._check(a)
        out = []
        for _ in range(self.k):
            a, c = divmod(a, self.p)
            out.append(c)
        return tuple(out)

    def element(self, coeffs: Sequence[int]) -> int:
        """Element built from up to k coefficients (low degree first)."""
        coeffs = list(coeffs)
        if not 1 <= len(coeffs) <= self.k:
            raise ValueError(f"expected 1..{self.k} coefficients")
        if any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"coefficients must lie in [0, {self.p})")
        a = 0
        for c in reversed(coeffs):
            a = a * self.p + c
        return a

    def from_int(self, c: int) -> int:
        """The scalar c reduced into the prime subfield."""
        return c % self.p

    def _check(self, a: int) -> None:
        if not 0 <= a < self.q:
            raise ValueError(f"element {a} out of range for F_{self.q}")

    # -- external text form -------------------------------------------------

    def format_element(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        return ",".join(str(c) for c in self.coeffs_of(a))

    def parse_element(self, text: str) -> int:
        """Parse "5" (prime field) or "c0,c1,..." (extension field)."""
        parts = text.strip().split(",")
        try:
            coeffs = [int(s) for s in parts]
        except ValueError:
            raise ValueError(f"invalid field element {text!r}") from None
        if self.k == 1 and len(coeffs) != 1:
            raise ValueError(f"expected a single residue, got {text!r}")
        return self.element(coeffs)

    def format_modulus(self) -> str:
        return ",".join(str(c) for c in self.modulus)

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.q <= _TABLE_MAX_Q:
            if self._add_t is None:
                self._build_tables()
            return self._add_t[a][b]
        return self._add_poly(a, b)

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (self.p - a) % self.p
        if self.q <= _TABLE_MAX_Q:
            if self._neg_t is None:
                self._build_tables()
            return self._neg_t[a]
        p = self.p
        out = 0
        for c in reversed(self.coeffs_of(a)):
            out = out * p + (p - c) % p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if self.q <= _TABLE_MAX_Q:
            if self._mul_t is None:
                self._build_tables()
            return self._mul_t[a][b]
        return self._mul_poly(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 is not invertible")
        if self.k == 1:
            return pow(a, -1, self.p)
        if self.q <= _TABLE_MAX_Q:
            if self._inv_t is None:
                self._build_tables()
            return self._inv_t[a]
        return self.pow(a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        """a**e by square-and-multiply; e may be negative for a != 0."""
        if self.k == 1:
            try:
                return pow(a, e, self.p)
            except ValueError:
                raise ZeroDivisionError("0 is not invertible") from None
        if e < 0:
            a, e = self.inv(a), -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def _mul_poly(self, a: int, b: int) -> int:
        prod = _pmod(_pmul(self.coeffs_of(a), self.coeffs_of(b), self.p),
                     self.modulus, self.p)
        out = 0
        for c in reversed(prod):
            out = out * self.p + c
        return out

    def _add_poly(self, a: int, b: int) -> int:
        p = self.p
        ca, cb = self.coeffs_of(a), self.coeffs_of(b)
        out = 0
        for x, y in zip(reversed(ca), reversed(cb)):
            out = out * p + (x + y) % p
        return out

    def _build_tables(self) -> None:
        q, p, mod = self.q, self.p, self.modulus
        polys = [list(self.coeffs_of(a)) for a in range(q)]

        def enc(poly: list[int]) -> int:
            out = 0
            for c in reversed(poly):
                out = out * p + c
            return out

        mul_t = [[0] * q for _ in range(q)]
        for a in range(q):
            pa = polys[a]
            for b in range(a, q):
                v = enc(_pmod(_pmul(pa, polys[b], p), mod, p))
                mul_t[a][b] = v
                mul_t[b][a] = v
        add_t = [[0] * q for _ in range(q)]
        for a in range(q):
            ca = polys[a]
            for b in range(a, q):
                v = enc([(x + y) % p for x, y in zip(ca, polys[b])])
                add_t[a][b] = v
                add_t[b][a] = v
        self._neg_t = [enc([(p - c) % p for c in polys[a]]) for a in range(q)]
        self._mul_t = mul_t
        self._add_t = add_t
        inv_t = [0] * q
        for a in range(1, q):
            inv_t[a] = self.pow(a, q - 2)
        self._inv_t = inv_t

    # -- squares -------------------------------------------------------------

    def is_square(self, d: int) -> bool:
        """Euler criterion d^((q-1)/2) = 1.  Odd characteristic only."""
        if d == 0:
            raise ValueError("square classification needs a nonzero element")
        if self.p == 2:
            raise ValueError("square classification is not defined in "
                             "characteristic 2")
        return self.pow(d, (self.q - 1) // 2) == 1

    def sqrt(self, d: int) -> Optional[int]:
        """One square root of d (the other is its negative), or None.

        Small fields are scanned exhaustively so the returned root is the
        least one in element order; large prime fields use Tonelli-Shanks.
        """
        if not self.is_square(d):
            return None
        if self.q <= _SEARCH_MAX_Q:
            for x in range(1, self.q):
                if self.mul(x, x) == d:
                    return x
            raise AssertionError("Euler criterion contradicted")
        if self.k == 1:
            return _tonelli_shanks(d, self.p)
        raise ValueError(f"square roots in F_{self.p}^{self.k} are only "
                         f"supported up to q = {_SEARCH_MAX_Q}")

    # -- cubes ---------------------------------------------------------------

    def classify_cube(self, r: int) -> CubeClass:
        """Cube classification of r != 0 via r^((q-1)/gcd(3, q-1)).

        Returns all cube roots that exist in the field: three of them
        (sorted ascending) when q = 1 (mod 3) and r is a cube, the unique
        one when q = 2 (mod 3), and the unique one (inverse Frobenius)
        in characteristic 3.
        """
        if r == 0:
            raise ValueError("cube classification needs a nonzero element")
        q = self.q
        if self.p == 3:
            return CubeClass(CubeKind.CHAR3, (self.pow(r, q // 3),))
        if q % 3 == 2:
            e = pow(3, -1, q - 1) if q > 2 else 0
            return CubeClass(CubeKind.ONE_ROOT, (self.pow(r, e),))
        if self.pow(r, (q - 1) // 3) != 1:
            return CubeClass(CubeKind.NON_CUBE, ())
        s = self._cube_root_scan(r)
        w = self.omega
        roots = sorted((s, self.mul(s, w), self.mul(s, self.mul(w, w))))
        return CubeClass(CubeKind.THREE_ROOTS, tuple(roots))

    def _cube_root_scan(self, r: int) -> int:
        if self.q > _SEARCH_MAX_Q:
            raise ValueError(f"cube root extraction with q = 1 (mod 3) is "
                             f"only supported up to q = {_SEARCH_MAX_Q}")
        for x in range(1, self.q):
            if self.mul(x, self.mul(x, x)) == r:
                return x
        raise AssertionError("Euler criterion contradicted")

    def _find_omega(self) -> int:
        e = (self.q - 1) // 3
        for x in range(2, self.q):
            w = self.pow(x, e)
            if w != 1:
                return min(w, self.mul(w, w))
        raise AssertionError("no primitive cube root of unity found")


def _tonelli_shanks(a: int, p: int) -> int:
    """Square root of a quadratic residue a modulo an odd prime p."""
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    s, e = p - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    n = 2
    while pow(n, (p - 1) // 2, p) != p - 1:
        n += 1
    x = pow(a, (s + 1) // 2, p)
    b = pow(a, s, p)
    g = pow(n, s, p)
    r = e
    while True:
        t, m = b, 0
        while t != 1:
            t = t * t % p
            m += 1
        if m == 0:
            return x
        gs = pow(g, 1 << (r - m - 1), p)
        g = gs * gs % p
        x = x * gs % p
        b = b * g % p
        r = m
