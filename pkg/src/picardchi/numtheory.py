"""Small exact number-theory helpers: Mobius, totient, divisors, gcd.

Inputs are plain ``int``.  Python integers never overflow, so the 64-bit
budget the enumerators are sized for is enforced as a range check on entry.
"""

from __future__ import annotations

from functools import lru_cache, reduce
from math import gcd, isqrt
from typing import Iterable

INT64_MAX = 2**63 - 1


def _check_posint(n: int, name: str = "n") -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")
    if n > INT64_MAX:
        raise OverflowError(f"{name}={n} exceeds the 64-bit range")
    return n


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``n`` as ascending ``(prime, exponent)`` pairs.

    Trial division; fine for the small indices the enumerators produce.
    """
    _check_posint(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


@lru_cache(maxsize=4096)
def _divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return tuple(small + large[::-1])


def divisors(n: int) -> list[int]:
    """All positive divisors of ``n`` in increasing order."""
    _check_posint(n)
    return list(_divisors(n))


def gcd_all(values: Iterable[int]) -> int:
    values = list(values)
    if not values:
        raise ValueError("gcd_all needs at least one value")
    for v in values:
        _check_posint(v, "entry")
    return reduce(gcd, values)
