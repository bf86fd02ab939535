"""Closed formulas for the Picard generating functions.

``weight_zero_jacobian(g)`` and ``topological_jacobian(g)`` return the
weight-zero and topological generating functions of the universal Picard
stack over M_{g,n} (summed over n) as Laurent polynomials in
``P_j = 1 + p_j``.  Both are finite sums over combinatorial data; the
enumeration bounds for the weight-zero sum are derived in
:func:`wz_enumeration_bounds`.

``kind`` arguments accept ``"weight0"`` (alias ``"wt0"``) and ``"top"``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd
from typing import Iterator

from .numtheory import divisors, mobius, totient
from .plaurent import ExpKey, PLaurent, expand_to_symfunc, substitute_P1_series, substitute_scalar
from .symfunc import TruncatedSymFunc

KINDS = {"weight0": "weight0", "wt0": "weight0", "top": "top"}


class DomainError(ValueError):
    """Arguments outside the range where a formula is stated."""


def _kind(kind: str) -> str:
    try:
        return KINDS[kind]
    except KeyError:
        raise ValueError(f"kind must be one of {sorted(KINDS)}, got {kind!r}") from None


def _check_genus(g: int) -> None:
    if isinstance(g, bool) or not isinstance(g, int):
        raise TypeError(f"g must be an int, got {type(g).__name__}")
    if g < 2:
        raise DomainError(f"closed formulas are only available for g >= 2, got g={g}")


# ---------------------------------------------------------------------------
# weight zero

def wz_enumeration_bounds(g: int) -> tuple[int, int]:
    """Bounds ``(m_max, k_max)`` containing every weight-zero term.

    Each d_i is a proper divisor of m, so d_i <= m/2, and the constraints
    sum(a) = k + 1, sum(a*d) = k*m + 1 - g give k*m + 1 - g <= (k+1)*m/2,
    i.e. m*(k-1) <= 2*(g-1).  With m >= 2 this forces k <= g, and for
    k >= 2 it gives m <= 2(g-1).  For k = 1 either s = 1, where a_1 = 2 and
    gcd(d_1) = 1 force d_1 = 1 and m = g + 1; or s = 2 with
    d_1 <= m/3 < d_2 <= m/2, so m + 1 - g <= 5m/6 and m <= 6(g-1).
    """
    _check_genus(g)
    return max(g + 1, 6 * (g - 1)), g


def _weight_zero_terms(g: int, m_max: int, k_max: int) -> Iterator[tuple[int, int, tuple, tuple]]:
    """Yield ``(k, m, a, d)`` for every admissible index of the weight-zero sum."""
    for m in range(2, m_max + 1):
        # mu(m/d) = 0 kills the term, so only those divisors matter
        ds = [d for d in divisors(m)[:-1] if mobius(m // d)]
        for k in range(1, k_max + 1):
            target = k * m + 1 - g
            count = k + 1
            if target < count:
                continue
            yield from ((k, m, a, d) for a, d in _choose(ds, count, target))


def _choose(ds: list[int], count: int, target: int):
    """Pick positive multiplicities a_i for an increasing subset of ``ds``
    with sum(a) = count and sum(a*d) = target and gcd(d) = 1."""
    n = len(ds)

    def rec(pos, count, target, a, d, gd):
        if count == 0:
            if target == 0 and gd == 1:
                yield tuple(a), tuple(d)
            return
        if pos == n:
            return
        # remaining picks use divisors ds[pos:], all between ds[pos] and ds[-1]
        if target < count * ds[pos] or target > count * ds[-1]:
            return
        di = ds[pos]
        for ai in range(count, 0, -1):
            if ai * di > target:
                continue
            a.append(ai)
            d.append(di)
            yield from rec(pos + 1, count - ai, target - ai * di, a, d, gcd(gd, di))
            a.pop()
            d.pop()
        yield from rec(pos + 1, count, target, a, d, gd)

    yield from rec(0, count, target, [], [], 0)


def weight_zero_term(g: int, k: int, m: int, a, d) -> tuple[ExpKey, Fraction]:
    """Monomial and coefficient of a single weight-zero index."""
    c = Fraction((-1) ** k * m ** (k - 1) * factorial(k - 1))
    exps = {m: -k}
    for ai, di in zip(a, d):
        c *= Fraction(mobius(m // di) ** ai, di**ai * factorial(ai))
        exps[di] = exps.get(di, 0) + ai
    return ExpKey.of(exps), c


def weight_zero_jacobian(g: int, bounds: tuple[int, int] | None = None) -> PLaurent:
    """Weight-zero generating function for Pic_{g,n}, summed over n."""
    _check_genus(g)
    if bounds is None:
        return _weight_zero_cached(g)
    return _weight_zero(g, *bounds)


@lru_cache(maxsize=None)
def _weight_zero_cached(g: int) -> PLaurent:
    return _weight_zero(g, *wz_enumeration_bounds(g))


def _weight_zero(g: int, m_max: int, k_max: int) -> PLaurent:
    return PLaurent(weight_zero_term(g, k, m, a, d)
                    for k, m, a, d in _weight_zero_terms(g, m_max, k_max))


# ---------------------------------------------------------------------------
# cyclic-cover counts N(r; k_1, ..., k_{r-1})

def _check_class_counts(r: int, k) -> dict[int, int]:
    counts = _as_counts(k)
    for i, ki in counts.items():
        if ki < 0:
            raise DomainError(f"k_{i} must be nonnegative")
        if ki and (i < 1 or i >= r or r % i):
            raise DomainError(f"k_{i} > 0 needs i to be a proper divisor of r={r}")
    return {i: ki for i, ki in counts.items() if ki}


def _as_counts(k) -> dict[int, int]:
    # accept {i: k_i} or the positional list [k_1, ..., k_{r-1}]
    if isinstance(k, dict):
        return {int(i): int(v) for i, v in k.items()}
    return {i + 1: int(v) for i, v in enumerate(k)}


def n_count_closed(r: int, k) -> int:
    """N(r; k) from the divisor-sum formula; the division by r must be exact."""
    counts = _check_class_counts(r, k)
    total = Fraction(0)
    for d in divisors(r):
        prod = Fraction(totient(d))
        for i, ki in counts.items():
            q = d // gcd(d, i)
            prod *= Fraction(mobius(q) * totient(r // i), totient(q)) ** ki
            if not prod:
                break
        total += prod
    n = total / r
    assert n.denominator == 1, f"N({r}; {counts}) = {n} is not an integer"
    return int(n)


def n_count_oracle(r: int, k) -> int:
    """N(r; k) by dynamic programming over residue sums mod r.

    Counts tuples with ``gcd(r, x_j)`` prescribed per coordinate (k_i
    coordinates with gcd i) and ``sum x_j = 0 mod r``.
    """
    counts = _check_class_counts(r, k)
    dist = [0] * r
    dist[0] = 1
    for i, ki in counts.items():
        allowed = [x for x in range(r) if gcd(r, x) == i]
        for _ in range(ki):
            new = [0] * r
            for s, w in enumerate(dist):
                if w:
                    for x in allowed:
                        new[(s + x) % r] += w
            dist = new
    return dist[0]


# ---------------------------------------------------------------------------
# topological

def _compositions(idx: list[int], total: int, weight: int):
    """Nonnegative k over ``idx`` with sum(k) = total and sum(i*k_i) = weight."""
    if not idx:
        if total == 0 and weight == 0:
            yield {}
        return
    i, rest = idx[0], idx[1:]
    lo = rest[0] if rest else None
    hi = rest[-1] if rest else None
    for c in range(min(total, weight // i) + 1):
        t, w = total - c, weight - c * i
        if rest and not (t * lo <= w <= t * hi):
            continue
        for tail in _compositions(rest, t, w):
            if c:
                tail = {i: c, **tail}
            yield tail


def topological_cells(g: int):
    """Yield ``(r, s, k)`` for every index of the topological sum."""
    _check_genus(g)
    for r in range(2, 4 * g + 3):
        idx = divisors(r)[:-1]
        for s in range(3, 2 * g + 3):
            weight = r * (s - 2) + 2 - 2 * g
            if not (s * idx[0] <= weight <= s * idx[-1]):
                continue
            for k in _compositions(idx, s, weight):
                gd = 0
                for i in k:
                    gd = gcd(gd, i)
                if gd == 1:
                    yield r, s, k


def topological_term(r: int, s: int, k: dict[int, int], n_count: int | None = None
                     ) -> tuple[ExpKey, Fraction]:
    if n_count is None:
        n_count = n_count_closed(r, k)
    c = Fraction((-1) ** (s - 3) * factorial(s - 3) * n_count * r ** (s - 3))
    for i, ki in k.items():
        c /= i**ki * factorial(ki)
    return ExpKey.of({r: 2 - s, **k}), c


def topological_jacobian(g: int, cross_check: bool = False) -> PLaurent:
    """Topological generating function for Pic_{g,n}, summed over n.

    With ``cross_check`` every N is also computed by the residue DP and a
    mismatch raises ``AssertionError``.
    """
    _check_genus(g)
    if not cross_check:
        return _topological_cached(g)
    terms = []
    for r, s, k in topological_cells(g):
        n = n_count_closed(r, k)
        oracle = n_count_oracle(r, k)
        if n != oracle:
            raise AssertionError(f"N({r}; {k}): closed form {n} != oracle {oracle}")
        terms.append(topological_term(r, s, k, n))
    return PLaurent(terms)


@lru_cache(maxsize=None)
def _topological_cached(g: int) -> PLaurent:
    return PLaurent(topological_term(r, s, k) for r, s, k in topological_cells(g))


# ---------------------------------------------------------------------------
# specialisations

def jacobian(g: int, kind: str) -> PLaurent:
    return weight_zero_jacobian(g) if _kind(kind) == "weight0" else topological_jacobian(g)


def chi_pic(g: int, kind: str) -> Fraction:
    """Euler characteristic of Pic_g: every ``P_j -> 1``."""
    return substitute_scalar(jacobian(g, kind), default=1)


def chi_series(g: int, kind: str, max_n: int) -> list[Fraction]:
    """``chi(Pic_{g,n})`` for ``n = 0..max_n``."""
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    coeffs = substitute_P1_series(jacobian(g, kind), max_n)
    return [c * factorial(n) for n, c in enumerate(coeffs)]


def equivariant_chi(g: int, kind: str, n: int) -> TruncatedSymFunc:
    """Frobenius characteristic of the S_n-equivariant Euler characteristic
    of Pic_{g,n}: the degree-n part of the generating function."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return expand_to_symfunc(jacobian(g, kind), n).homogeneous_part(n)
