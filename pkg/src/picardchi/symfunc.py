"""Truncated symmetric functions in the power-sum basis.

``TruncatedSymFunc`` is an element of the degree-completed ring
Q[[p_1, p_2, ...]] kept up to total degree ``D`` (``deg p_i = i``).
``MarkedSymFunc`` adds an inert marker variable ``x``, truncated separately
at order ``X``.  Everything is exact ``Fraction`` arithmetic.

A power-sum monomial ``p_1^{m_1} p_2^{m_2} ...`` is keyed by the tuple of
``(i, m_i)`` pairs with ``m_i > 0``, ascending in ``i``; the empty tuple is
the constant monomial.
"""

from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Union

from ._text import coeff_str, join_terms, latex_frac
from .numtheory import mobius

Key = tuple  # tuple[tuple[int, int], ...]
Scalar = Union[int, Fraction]

ONE_KEY: Key = ()


@lru_cache(maxsize=None)
def key_degree(key: Key) -> int:
    return sum(i * m for i, m in key)


@lru_cache(maxsize=1 << 18)
def merge_keys(a: Key, b: Key) -> Key:
    """Key of the product of two power-sum monomials."""
    if not a:
        return b
    if not b:
        return a
    out = []
    ia = ib = 0
    while ia < len(a) and ib < len(b):
        (i, m), (j, n) = a[ia], b[ib]
        if i == j:
            out.append((i, m + n))
            ia += 1
            ib += 1
        elif i < j:
            out.append((i, m))
            ia += 1
        else:
            out.append((j, n))
            ib += 1
    out.extend(a[ia:])
    out.extend(b[ib:])
    return tuple(out)


def canonical_key(spec) -> Key:
    """Normalise ``{i: m}`` or an iterable of ``(i, m)`` pairs to a key."""
    items = spec.items() if isinstance(spec, Mapping) else spec
    acc: dict[int, int] = defaultdict(int)
    for i, m in items:
        if i < 1 or m < 0:
            raise ValueError(f"bad power-sum factor p_{i}^{m}")
        acc[int(i)] += int(m)
    return tuple(sorted((i, m) for i, m in acc.items() if m))


def _key_str(key: Key) -> str:
    return "*".join(f"p{i}" if m == 1 else f"p{i}^{m}" for i, m in key)


def _check_degree(value: int, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a nonnegative int, got {value!r}")
    return value


class TruncatedSymFunc:
    """Symmetric function truncated at total degree ``degree``.

    Instances are treated as immutable.  Arithmetic between two elements
    requires equal truncation degrees; ints and Fractions act as constants.
    """

    __slots__ = ("degree", "_terms", "_graded")

    def __init__(self, terms: Mapping | Iterable = (), degree: int = 0):
        self.degree = _check_degree(degree, "degree")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Key, Fraction] = defaultdict(Fraction)
        for k, c in items:
            k = canonical_key(k)
            if key_degree(k) <= degree:
                acc[k] += Fraction(c)
        self._terms = {k: c for k, c in acc.items() if c}
        self._graded = None

    @classmethod
    def _raw(cls, terms: dict, degree: int) -> "TruncatedSymFunc":
        # terms already canonical, truncated and zero-free
        obj = cls.__new__(cls)
        obj.degree = degree
        obj._terms = terms
        obj._graded = None
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "TruncatedSymFunc":
        return cls._raw({}, _check_degree(degree, "degree"))

    @classmethod
    def constant(cls, c: Scalar, degree: int) -> "TruncatedSymFunc":
        return cls({ONE_KEY: c}, degree)

    @classmethod
    def p(cls, i: int, degree: int) -> "TruncatedSymFunc":
        """The power sum ``p_i`` (zero if ``i`` exceeds the truncation)."""
        return cls({((i, 1),): 1}, degree)

    # -- basic access ------------------------------------------------------

    @property
    def terms(self) -> dict[Key, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, key) -> Fraction:
        return self._terms.get(canonical_key(key), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(ONE_KEY, Fraction(0))

    def min_degree(self) -> int | None:
        if not self._terms:
            return None
        return min(key_degree(k) for k in self._terms)

    def graded(self) -> dict[int, list[tuple[Key, Fraction]]]:
        if self._graded is None:
            g = defaultdict(list)
            for k, c in self._terms.items():
                g[key_degree(k)].append((k, c))
            self._graded = dict(g)
        return self._graded

    def homogeneous_part(self, n: int) -> "TruncatedSymFunc":
        return TruncatedSymFunc._raw(
            {k: c for k, c in self._terms.items() if key_degree(k) == n}, self.degree)

    def retruncate(self, degree: int) -> "TruncatedSymFunc":
        """Same stored terms at a new truncation order.

        Lowering drops terms; raising reads the stored terms as an exact
        polynomial, which is only meaningful when that is what they are.
        """
        _check_degree(degree, "degree")
        return TruncatedSymFunc._raw(
            {k: c for k, c in self._terms.items() if key_degree(k) <= degree}, degree)

    # -- ring structure ----------------------------------------------------

    def _coerce(self, other) -> "TruncatedSymFunc":
        if isinstance(other, TruncatedSymFunc):
            if other.degree != self.degree:
                raise ValueError(
                    f"truncation mismatch: degree {self.degree} vs {other.degree}")
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSymFunc.constant(other, self.degree)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TruncatedSymFunc._raw(out, self.degree)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSymFunc._raw({k: -c for k, c in self._terms.items()}, self.degree)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "TruncatedSymFunc":
        c = Fraction(c)
        if not c:
            return TruncatedSymFunc.zero(self.degree)
        return TruncatedSymFunc._raw({k: v * c for k, v in self._terms.items()}, self.degree)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        D = self.degree
        out: dict[Key, Fraction] = defaultdict(Fraction)
        ga, gb = self.graded(), other.graded()
        for da, ta in ga.items():
            for db, tb in gb.items():
                if da + db > D:
                    continue
                for ka, ca in ta:
                    for kb, cb in tb:
                        out[merge_keys(ka, kb)] += ca * cb
        return TruncatedSymFunc._raw({k: c for k, c in out.items() if c}, D)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = TruncatedSymFunc.constant(1, self.degree)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, TruncatedSymFunc):
            return self.degree == other.degree and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == TruncatedSymFunc.constant(other, self.degree)
        return NotImplemented

    __hash__ = None

    # -- substitutions -----------------------------------------------------

    def dilate(self, k: int) -> "TruncatedSymFunc":
        """``p_k o f``: every ``p_i`` replaced by ``p_{ik}``."""
        if k == 1:
            return self
        out = {}
        for key, c in self._terms.items():
            if key_degree(key) * k <= self.degree:
                out[tuple((i * k, m) for i, m in key)] = c
        return TruncatedSymFunc._raw(out, self.degree)

    def plethysm(self, g: "TruncatedSymFunc") -> "TruncatedSymFunc":
        return plethysm(self, g)

    def sorted_terms(self) -> list[tuple[Key, Fraction]]:
        return sorted(self._terms.items(), key=lambda kc: (key_degree(kc[0]), kc[0]))

    # -- output ------------------------------------------------------------

    def render(self, fmt: str = "text") -> str:
        terms = self.sorted_terms()
        if fmt == "text":
            return join_terms((c, _key_str(k)) for k, c in terms)
        if fmt == "json":
            if all(k == ONE_KEY for k, _ in terms):
                # constants print as a bare JSON scalar string
                return json.dumps(coeff_str(self.constant_term()))
            body = [{"coeff": coeff_str(c), "powers": {str(i): m for i, m in k}}
                    for k, c in terms]
            return json.dumps({"terms": body}, separators=(",", ":"))
        if fmt == "latex":
            if not terms:
                return "0"
            parts = []
            for k, c in terms:
                mono = " ".join(f"p_{{{i}}}" if m == 1 else f"p_{{{i}}}^{{{m}}}" for i, m in k)
                s = latex_frac(abs(c)) if (abs(c) != 1 or not mono) else ""
                body = (s + " " + mono).strip()
                parts.append(("-" if c < 0 else "+") + " " + body)
            out = " ".join(parts)
            return out[2:] if out.startswith("+ ") else out
        raise ValueError(f"unknown format {fmt!r}")

    def __str__(self) -> str:
        return self.render("text")

    def __repr__(self) -> str:
        return f"TruncatedSymFunc({self.render('text')}, degree={self.degree})"


def p(i: int, degree: int) -> TruncatedSymFunc:
    return TruncatedSymFunc.p(i, degree)


# ---------------------------------------------------------------------------
# plethysm, Exp, Log

def _require_positive_part(f: TruncatedSymFunc, what: str) -> None:
    if f.constant_term():
        raise ValueError(f"{what} requires zero constant term, got {f.constant_term()}")


def plethysm(f: TruncatedSymFunc, g: TruncatedSymFunc) -> TruncatedSymFunc:
    """``f o g`` for ``g`` without constant term, truncated at the common degree."""
    if f.degree != g.degree:
        raise ValueError(f"truncation mismatch: degree {f.degree} vs {g.degree}")
    _require_positive_part(g, "plethysm")
    D = f.degree
    powers: dict[tuple[int, int], TruncatedSymFunc] = {}

    def power(i: int, m: int) -> TruncatedSymFunc:
        if (i, m) not in powers:
            powers[(i, m)] = g.dilate(i) if m == 1 else power(i, m - 1) * power(i, 1)
        return powers[(i, m)]

    result = TruncatedSymFunc.zero(D)
    for key, c in f.items():
        term = TruncatedSymFunc.constant(c, D)
        for i, m in key:
            term = term * power(i, m)
            if not term:
                break
        result = result + term
    return result


def _exp_series(s: TruncatedSymFunc) -> TruncatedSymFunc:
    # exp(s) for s without constant term; s^k vanishes once k > degree
    _require_positive_part(s, "exp")
    result = TruncatedSymFunc.constant(1, s.degree)
    term = result
    for k in range(1, s.degree + 1):
        term = (term * s).scale(Fraction(1, k))
        if not term:
            break
        result = result + term
    return result


def _log1p_series(u: TruncatedSymFunc) -> TruncatedSymFunc:
    # log(1 + u) for u without constant term
    _require_positive_part(u, "log")
    result = TruncatedSymFunc.zero(u.degree)
    power = TruncatedSymFunc.constant(1, u.degree)
    for k in range(1, u.degree + 1):
        power = power * u
        if not power:
            break
        result = result + power.scale(Fraction((-1) ** (k + 1), k))
    return result


def exp_plethystic(f: TruncatedSymFunc) -> TruncatedSymFunc:
    """Plethystic exponential ``sum_{n>0} h_n o f`` (no ``h_0`` term).

    Computed as ``exp(sum_{n>0} (p_n o f)/n) - 1``.
    """
    _require_positive_part(f, "Exp")
    s = TruncatedSymFunc.zero(f.degree)
    for n in range(1, f.degree + 1):
        s = s + f.dilate(n).scale(Fraction(1, n))
    return _exp_series(s) - 1


def log_plethystic(f: TruncatedSymFunc) -> TruncatedSymFunc:
    """``Log(1 + f)``, the plethystic inverse of ``exp_plethystic``."""
    _require_positive_part(f, "Log")
    result = TruncatedSymFunc.zero(f.degree)
    for n in range(1, f.degree + 1):
        mu = mobius(n)
        if mu:
            result = result + _log1p_series(f.dilate(n)).scale(Fraction(mu, n))
    return result


def partitions(n: int, largest: int | None = None):
    """Partitions of ``n`` as non-increasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def complete_homogeneous(n: int, degree: int) -> TruncatedSymFunc:
    """``h_n`` via the Frobenius average over cycle types of ``S_n``."""
    out = {}
    for lam in partitions(n):
        mult = defaultdict(int)
        for part in lam:
            mult[part] += 1
        z = 1
        for i, m in mult.items():
            z *= i**m * factorial(m)
        out[tuple(sorted(mult.items()))] = Fraction(1, z)
    return TruncatedSymFunc(out, degree)


# ---------------------------------------------------------------------------
# specialisations to Q[[x]]

def specialize_rk(f: TruncatedSymFunc) -> list[Fraction]:
    """Rank map ``p_1 -> x``, ``p_k -> 0`` (k > 1); coefficients of x^0..x^D."""
    out = [Fraction(0)] * (f.degree + 1)
    for key, c in f.items():
        if not key:
            out[0] += c
        elif len(key) == 1 and key[0][0] == 1:
            out[key[0][1]] += c
    return out


def specialize_inv(f: TruncatedSymFunc) -> list[Fraction]:
    """``p_k -> x^k``; coefficients of x^0..x^D."""
    out = [Fraction(0)] * (f.degree + 1)
    for key, c in f.items():
        out[key_degree(key)] += c
    return out


# ---------------------------------------------------------------------------
# marked ring Q[[p]][[x]]

class MarkedSymFunc:
    """Element of ``Q[[p_1, p_2, ...]][[x]]`` truncated at p-degree ``degree``
    and x-order ``x_order``.  Terms are keyed by ``(power-sum key, x exponent)``.
    """

    __slots__ = ("degree", "x_order", "_terms")

    def __init__(self, terms: Mapping | Iterable = (), degree: int = 0, x_order: int = 0):
        self.degree = _check_degree(degree, "degree")
        self.x_order = _check_degree(x_order, "x_order")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[Key, int], Fraction] = defaultdict(Fraction)
        for (k, b), c in items:
            k = canonical_key(k)
            if b < 0:
                raise ValueError("negative x exponent")
            if key_degree(k) <= degree and b <= x_order:
                acc[(k, int(b))] += Fraction(c)
        self._terms = {kb: c for kb, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict, degree: int, x_order: int) -> "MarkedSymFunc":
        obj = cls.__new__(cls)
        obj.degree = degree
        obj.x_order = x_order
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls, degree: int, x_order: int) -> "MarkedSymFunc":
        return cls._raw({}, degree, x_order)

    @classmethod
    def constant(cls, c: Scalar, degree: int, x_order: int) -> "MarkedSymFunc":
        return cls({(ONE_KEY, 0): c}, degree, x_order)

    @classmethod
    def x_power(cls, b: int, degree: int, x_order: int) -> "MarkedSymFunc":
        return cls({(ONE_KEY, b): 1}, degree, x_order)

    @classmethod
    def from_symfunc(cls, f: TruncatedSymFunc, x_order: int) -> "MarkedSymFunc":
        return cls._raw({(k, 0): c for k, c in f.items()}, f.degree, x_order)

    @property
    def terms(self) -> dict[tuple[Key, int], Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def x_coefficient(self, b: int) -> TruncatedSymFunc:
        """Coefficient of ``x^b`` as a symmetric function."""
        return TruncatedSymFunc._raw(
            {k: c for (k, e), c in self._terms.items() if e == b}, self.degree)

    def retruncate(self, degree: int, x_order: int) -> "MarkedSymFunc":
        _check_degree(degree, "degree")
        _check_degree(x_order, "x_order")
        return MarkedSymFunc._raw(
            {(k, b): c for (k, b), c in self._terms.items()
             if key_degree(k) <= degree and b <= x_order},
            degree, x_order)

    def _coerce(self, other) -> "MarkedSymFunc":
        if isinstance(other, MarkedSymFunc):
            if (other.degree, other.x_order) != (self.degree, self.x_order):
                raise ValueError(
                    f"truncation mismatch: {(self.degree, self.x_order)} vs "
                    f"{(other.degree, other.x_order)}")
            return other
        if isinstance(other, TruncatedSymFunc):
            if other.degree != self.degree:
                raise ValueError(
                    f"truncation mismatch: degree {self.degree} vs {other.degree}")
            return MarkedSymFunc.from_symfunc(other, self.x_order)
        if isinstance(other, (int, Fraction)):
            return MarkedSymFunc.constant(other, self.degree, self.x_order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for kb, c in other._terms.items():
            v = out.get(kb, 0) + c
            if v:
                out[kb] = v
            else:
                out.pop(kb, None)
        return MarkedSymFunc._raw(out, self.degree, self.x_order)

    __radd__ = __add__

    def __neg__(self):
        return MarkedSymFunc._raw(
            {kb: -c for kb, c in self._terms.items()}, self.degree, self.x_order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "MarkedSymFunc":
        c = Fraction(c)
        if not c:
            return MarkedSymFunc.zero(self.degree, self.x_order)
        return MarkedSymFunc._raw(
            {kb: v * c for kb, v in self._terms.items()}, self.degree, self.x_order)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        D, X = self.degree, self.x_order
        out: dict[tuple[Key, int], Fraction] = defaultdict(Fraction)
        rhs = [(k, key_degree(k), b, c) for (k, b), c in other._terms.items()]
        for (ka, ba), ca in self._terms.items():
            da = key_degree(ka)
            for kb, db, bb, cb in rhs:
                if da + db <= D and ba + bb <= X:
                    out[(merge_keys(ka, kb), ba + bb)] += ca * cb
        return MarkedSymFunc._raw({kb: c for kb, c in out.items() if c}, D, X)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = MarkedSymFunc.constant(1, self.degree, self.x_order)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, MarkedSymFunc):
            return ((self.degree, self.x_order) == (other.degree, other.x_order)
                    and self._terms == other._terms)
        return NotImplemented

    __hash__ = None

    def dilate(self, k: int) -> "MarkedSymFunc":
        """``p_k o F``: ``p_i -> p_{ik}`` and ``x -> x^k``."""
        if k == 1:
            return self
        out = {}
        for (key, b), c in self._terms.items():
            if key_degree(key) * k <= self.degree and b * k <= self.x_order:
                out[(tuple((i * k, m) for i, m in key), b * k)] = c
        return MarkedSymFunc._raw(out, self.degree, self.x_order)

    def plethysm(self, g) -> "MarkedSymFunc":
        """``F o g`` with ``x o g = x``; ``g`` must have no bidegree-(0,0) term."""
        g = self._coerce(g)
        if g is NotImplemented:
            raise TypeError("plethysm needs a symmetric function argument")
        if g._terms.get((ONE_KEY, 0)):
            raise ValueError("plethysm requires zero constant term in the inner argument")
        D, X = self.degree, self.x_order
        powers: dict[tuple[int, int], MarkedSymFunc] = {}

        def power(i: int, m: int) -> MarkedSymFunc:
            if (i, m) not in powers:
                powers[(i, m)] = g.dilate(i) if m == 1 else power(i, m - 1) * power(i, 1)
            return powers[(i, m)]

        result = MarkedSymFunc.zero(D, X)
        for (key, b), c in self._terms.items():
            term = MarkedSymFunc({(ONE_KEY, b): c}, D, X)
            for i, m in key:
                term = term * power(i, m)
                if not term:
                    break
            result = result + term
        return result

    def sorted_terms(self):
        return sorted(self._terms.items(),
                      key=lambda kv: (kv[0][1], key_degree(kv[0][0]), kv[0][0]))

    def render(self) -> str:
        def mono(k, b):
            parts = [_key_str(k)] if k else []
            if b:
                parts.append("x" if b == 1 else f"x^{b}")
            return "*".join(parts)
        return join_terms((c, mono(k, b)) for (k, b), c in self.sorted_terms())

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"MarkedSymFunc({self.render()}, degree={self.degree}, x_order={self.x_order})"


def _homomorphism_image(f: TruncatedSymFunc, image, x_order: int) -> MarkedSymFunc:
    """Image of ``f`` under the algebra map ``p_j -> image(j)``."""
    D = f.degree
    cache: dict[tuple[int, int], MarkedSymFunc] = {}

    def power(j: int, m: int) -> MarkedSymFunc:
        if (j, m) not in cache:
            cache[(j, m)] = image(j) if m == 1 else power(j, m - 1) * power(j, 1)
        return cache[(j, m)]

    result = MarkedSymFunc.zero(D, x_order)
    for key, c in f.items():
        term = MarkedSymFunc.constant(c, D, x_order)
        for j, m in key:
            term = term * power(j, m)
        result = result + term
    return result


def inv_delta(f: TruncatedSymFunc, x_order: int) -> MarkedSymFunc:
    """Algebra map ``p_j -> p_j + x^j``, the collapsed form of inv composed
    with the coproduct.

    ``f`` is read as the polynomial of its stored terms.  A term of
    p-degree ``a`` and x-degree ``b`` in the image comes from degree
    ``a + b`` of ``f``, so callers wanting the exact image of a series at
    ``(D, X)`` must supply ``f`` to degree ``D + X`` and retruncate.
    """
    _check_degree(x_order, "x_order")
    D = f.degree
    return _homomorphism_image(
        f, lambda j: MarkedSymFunc({(((j, 1),), 0): 1, (ONE_KEY, j): 1}, D, x_order), x_order)


def transform_T(f: TruncatedSymFunc, x_order: int) -> MarkedSymFunc:
    """Algebra map ``p_n -> (p_n + x^n) / (1 - x^n)`` into the marked ring."""
    _check_degree(x_order, "x_order")
    D = f.degree

    def image(n: int) -> MarkedSymFunc:
        terms = {}
        for t in range(0, x_order // n + 1):
            terms[(((n, 1),), n * t)] = 1
            terms[(ONE_KEY, n * (t + 1))] = 1
        return MarkedSymFunc(terms, D, x_order)

    return _homomorphism_image(f, image, x_order)


def transform_T_composite(f: TruncatedSymFunc, x_order: int) -> MarkedSymFunc:
    """``inv_delta(f o Exp(p_1)) o Log(1 + p_1)`` truncated at ``(D, X)``.

    Agrees with :func:`transform_T`; the two routes share no code beyond
    the ring arithmetic.  Works at p-degree ``D + X`` internally so the
    marked image is exact at ``(D, X)``.
    """
    D = f.degree
    W = D + x_order
    fw = f.retruncate(W)
    e1 = exp_plethystic(TruncatedSymFunc.p(1, W))
    lifted = inv_delta(plethysm(fw, e1), x_order).retruncate(D, x_order)
    return lifted.plethysm(log_plethystic(TruncatedSymFunc.p(1, D)))
