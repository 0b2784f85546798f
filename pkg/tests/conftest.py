"""Shared helpers for the test suite."""

import functools

from pellfq import Field, is_prime


@functools.lru_cache(maxsize=None)
def field(p: int, k: int = 1) -> Field:
    """One shared context per (p, k); Fields are immutable so reuse is safe."""
    return Field(p, k)


def prime_powers(limit: int, odd_only: bool = False) -> list[tuple[int, int]]:
    """All (p, k) with p^k <= limit, ordered by field size."""
    out = []
    for p in range(2, limit + 1):
        if not is_prime(p) or (odd_only and p == 2):
            continue
        q, k = p, 1
        while q <= limit:
            out.append((p, k, q))
            q *= p
            k += 1
    out.sort(key=lambda t: t[2])
    return [(p, k) for (p, k, _) in out]
