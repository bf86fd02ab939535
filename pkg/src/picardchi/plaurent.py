"""Sparse Laurent polynomials in the variables ``P_j = 1 + p_j``.

The Picard generating functions are finite Laurent polynomials in the P_j
with rational coefficients.  ``P_j`` carries degree ``j``; a monomial
``prod P_j^{e_j}`` has Laurent degree ``sum j*e_j`` and exponent sum
``sum e_j``.
"""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Union

from ._text import coeff_str, join_terms, latex_frac
from .symfunc import TruncatedSymFunc

Scalar = Union[int, Fraction]


class DivergenceError(ValueError):
    """A monomial whose limit at x = 1 does not exist."""

    def __init__(self, key: "ExpKey", e0: int):
        self.key = key
        super().__init__(
            f"monomial {key} has exponent sum {key.exponent_sum} > {e0}; limit diverges")


@dataclass(frozen=True, order=False)
class ExpKey:
    """Exponent vector of a Laurent monomial, stored as ascending ``(j, e_j)``
    pairs with every ``e_j`` nonzero."""

    exps: tuple[tuple[int, int], ...] = ()

    @classmethod
    def of(cls, spec: Mapping[int, int] | Iterable[tuple[int, int]] = ()) -> "ExpKey":
        items = spec.items() if isinstance(spec, Mapping) else spec
        acc: dict[int, int] = defaultdict(int)
        for j, e in items:
            j, e = int(j), int(e)
            if j < 1:
                raise ValueError(f"variable index must be >= 1, got {j}")
            acc[j] += e
        return cls(tuple(sorted((j, e) for j, e in acc.items() if e)))

    @property
    def exponent_sum(self) -> int:
        return sum(e for _, e in self.exps)

    @property
    def laurent_degree(self) -> int:
        return sum(j * e for j, e in self.exps)

    def exponent(self, j: int) -> int:
        for i, e in self.exps:
            if i == j:
                return e
        return 0

    def __mul__(self, other: "ExpKey") -> "ExpKey":
        return ExpKey.of(self.exps + other.exps)

    def sort_key(self):
        return (self.laurent_degree, self.exps)

    def as_dict(self) -> dict[int, int]:
        return dict(self.exps)

    def __str__(self) -> str:
        num = [f"P{j}" if e == 1 else f"P{j}^{e}" for j, e in self.exps if e > 0]
        den = [f"P{j}" if e == -1 else f"P{j}^{-e}" for j, e in self.exps if e < 0]
        if not den:
            return "*".join(num) if num else "1"
        top = "*".join(num) if num else "1"
        bottom = den[0] if len(den) == 1 else "(" + "*".join(den) + ")"
        return f"{top}/{bottom}"


ONE = ExpKey()


class PLaurent:
    """Finite sum of ``coefficient * prod P_j^{e_j}``; immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[ExpKey, Fraction] = defaultdict(Fraction)
        for k, c in items:
            if not isinstance(k, ExpKey):
                k = ExpKey.of(k)
            acc[k] += Fraction(c)
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "PLaurent":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, exps: Mapping[int, int] | Iterable = (), coeff: Scalar = 1) -> "PLaurent":
        return cls({ExpKey.of(exps): coeff})

    @classmethod
    def P(cls, j: int, e: int = 1) -> "PLaurent":
        return cls.monomial({j: e})

    @classmethod
    def constant(cls, c: Scalar) -> "PLaurent":
        return cls({ONE: c})

    @property
    def terms(self) -> dict[ExpKey, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def coefficient(self, exps) -> Fraction:
        k = exps if isinstance(exps, ExpKey) else ExpKey.of(exps)
        return self._terms.get(k, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_terms(self) -> list[tuple[ExpKey, Fraction]]:
        """Terms in canonical order: Laurent degree, then exponent pairs."""
        return sorted(self._terms.items(), key=lambda kc: kc[0].sort_key())

    # -- ring --------------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "PLaurent":
        if isinstance(other, PLaurent):
            return other
        if isinstance(other, (int, Fraction)):
            return PLaurent.constant(other)
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
        return PLaurent._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return PLaurent._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "PLaurent":
        c = Fraction(c)
        if not c:
            return PLaurent()
        return PLaurent._raw({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[ExpKey, Fraction] = defaultdict(Fraction)
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                out[ka * kb] += ca * cb
        return PLaurent._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    __hash__ = None

    def map_keys(self, fn) -> "PLaurent":
        """Apply ``fn(key, coeff) -> (key, coeff) | None`` term by term."""
        out = []
        for k, c in self._terms.items():
            r = fn(k, c)
            if r is not None:
                out.append(r)
        return PLaurent(out)

    # -- structure ---------------------------------------------------------

    def is_homogeneous(self, deg: int) -> bool:
        return all(k.laurent_degree == deg for k in self._terms)

    def exponent_sums(self) -> set[int]:
        return {k.exponent_sum for k in self._terms}

    def limit_transform(self, e0: int) -> "PLaurent":
        return limit_transform(self, e0)

    # -- output ------------------------------------------------------------

    def render(self, fmt: str = "text") -> str:
        return render(self, fmt)

    def __str__(self) -> str:
        return render(self, "text")

    def __repr__(self) -> str:
        return f"PLaurent({render(self, 'text')})"


def limit_transform(F: PLaurent, e0: int) -> PLaurent:
    """``lim_{x->1} (1-x)^e0 * F(P_k -> P_k / (1 - x^k))`` evaluated exactly.

    Each monomial picks up ``prod (1 - x^j)^{-e_j}``, which vanishes at
    x = 1 to order ``-exponent_sum``.  After the ``(1-x)^e0`` factor,
    monomials with exponent sum below ``e0`` tend to 0; those with exponent
    sum exactly ``e0`` tend to ``prod j^{-e_j}`` times themselves, because
    ``1 - x^j = (1 - x)(1 + x + ... + x^{j-1})``.  Exponent sum above ``e0``
    diverges and raises :class:`DivergenceError`.
    """
    out = {}
    for k, c in F.items():
        s = k.exponent_sum
        if s > e0:
            raise DivergenceError(k, e0)
        if s < e0:
            continue
        factor = Fraction(1)
        for j, e in k.exps:
            factor *= Fraction(j) ** (-e)
        out[k] = c * factor
    return PLaurent._raw(out)


def rescale_variables(F: PLaurent, factor) -> PLaurent:
    """Substitute ``P_j -> factor(j) * P_j``."""
    def step(k, c):
        for j, e in k.exps:
            c *= Fraction(factor(j)) ** e
        return (k, c)
    return F.map_keys(step)


def substitute_scalar(F: PLaurent, assignment: Mapping[int, Scalar] | None = None,
                      default: Scalar = 1) -> Fraction:
    """Evaluate ``F`` at ``P_j = assignment.get(j, default)``.

    Zero raised to a negative power raises ``ZeroDivisionError``.
    """
    assignment = assignment or {}
    total = Fraction(0)
    for k, c in F.items():
        v = c
        for j, e in k.exps:
            base = Fraction(assignment.get(j, default))
            if base == 0 and e < 0:
                raise ZeroDivisionError(f"P{j} = 0 with exponent {e}")
            v *= base ** e
        total += v
    return total


def substitute_P1_series(F: PLaurent, max_n: int | None = None) -> list[Fraction]:
    """Coefficients in ``t`` of ``F(P_1 -> 1 + t, P_j -> 1 for j > 1)``.

    Returned list has length ``max(max_n, top P_1 exponent) + 1``; pass
    ``max_n`` to pad with zeros.  Negative ``P_1`` exponents raise
    ``ValueError`` since they would give an infinite series.
    """
    top = 0
    for k in F.keys():
        e1 = k.exponent(1)
        if e1 < 0:
            raise ValueError(f"negative power of P1 in monomial {k}")
        top = max(top, e1)
    n = max(top, max_n or 0)
    out = [Fraction(0)] * (n + 1)
    for k, c in F.items():
        e1 = k.exponent(1)
        for i in range(e1 + 1):
            out[i] += c * comb(e1, i)
    return out if max_n is None else out[: max_n + 1]


def expand_to_symfunc(F: PLaurent, degree: int) -> TruncatedSymFunc:
    """Substitute ``P_j = 1 + p_j`` and expand, truncated at ``degree``.

    Negative powers expand as ``(1 + p_j)^{-k} = sum_i binom(-k, i) p_j^i``.
    """
    cache: dict[tuple[int, int], TruncatedSymFunc] = {}

    def factor(j: int, e: int) -> TruncatedSymFunc:
        if (j, e) not in cache:
            terms = {}
            for i in range(degree // j + 1):
                terms[((j, i),)] = _binom(e, i)
            cache[(j, e)] = TruncatedSymFunc(terms, degree)
        return cache[(j, e)]

    result = TruncatedSymFunc.zero(degree)
    for k, c in F.items():
        term = TruncatedSymFunc.constant(c, degree)
        for j, e in k.exps:
            term = term * factor(j, e)
        result = result + term
    return result


def _binom(e: int, i: int) -> int:
    # generalised binomial coefficient binom(e, i) for any integer e
    if e >= 0:
        return comb(e, i)
    return (-1) ** i * comb(-e + i - 1, i)


# ---------------------------------------------------------------------------
# rendering / parsing

def to_json_obj(F: PLaurent) -> dict:
    return {"terms": [
        {"coeff": coeff_str(c), "exps": {str(j): e for j, e in k.exps}}
        for k, c in F.sorted_terms()
    ]}


def from_json_obj(obj: Mapping) -> PLaurent:
    out = []
    for t in obj["terms"]:
        k = ExpKey.of((int(j), int(e)) for j, e in t["exps"].items())
        out.append((k, Fraction(t["coeff"])))
    return PLaurent(out)


def parse_json(text: str) -> PLaurent:
    return from_json_obj(json.loads(text))


def _latex_monomial(k: ExpKey) -> str:
    def pw(j, e):
        return f"P_{{{j}}}" if e == 1 else f"P_{{{j}}}^{{{e}}}"
    num = " ".join(pw(j, e) for j, e in k.exps if e > 0) or "1"
    den = " ".join(pw(j, -e) for j, e in k.exps if e < 0)
    return rf"\frac{{{num}}}{{{den}}}" if den else num


def render(F: PLaurent, fmt: str = "text") -> str:
    """Deterministic rendering in canonical order; ``fmt`` is text, latex or json."""
    terms = F.sorted_terms()
    if fmt == "text":
        return join_terms((c, "" if k == ONE else str(k)) for k, c in terms)
    if fmt == "json":
        return json.dumps(to_json_obj(F), separators=(",", ":"))
    if fmt == "latex":
        if not terms:
            return "0"
        parts = []
        for k, c in terms:
            mag = abs(c)
            mono = "" if k == ONE else _latex_monomial(k)
            if mono and mag == 1:
                body = mono
            else:
                body = (latex_frac(mag) + (" " + mono if mono else ""))
            parts.append(("- " if c < 0 else "+ ") + body)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else out
    raise ValueError(f"unknown format {fmt!r}")
