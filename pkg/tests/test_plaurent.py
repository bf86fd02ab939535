import json
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from picardchi.plaurent import (DivergenceError, ExpKey, PLaurent, expand_to_symfunc,
                                limit_transform, parse_json, render, substitute_P1_series,
                                substitute_scalar)
from picardchi.symfunc import TruncatedSymFunc, p

F = Fraction
P = PLaurent.P


def mono(coeff=1, **exps):
    return PLaurent.monomial({int(k[1:]): e for k, e in exps.items()}, coeff)


TABLE1_G2 = (mono(F(-1, 6), P2=1, P3=1, P6=-1) + mono(F(-1, 2), P1=2, P3=-1)
             + mono(F(-1, 3), P1=3, P2=-2))

plaurents = st.lists(
    st.tuples(st.dictionaries(st.integers(1, 5), st.integers(-3, 3), max_size=3),
              st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))),
    max_size=4).map(lambda ts: PLaurent((ExpKey.of(e), c) for e, c in ts))


def test_ring_examples():
    assert P(1) * P(1, -1) == 1
    assert mono(F(1, 2), P2=1) + mono(F(1, 2), P2=1) == P(2)
    assert P(2) * P(3) * P(6, -1) == mono(P2=1, P3=1, P6=-1)


def test_key_invariants():
    k = ExpKey.of({2: 1, 3: 1, 6: -1, 4: 0})
    assert k.exps == ((2, 1), (3, 1), (6, -1))
    assert k.exponent_sum == 1
    assert k.laurent_degree == -1


def test_is_homogeneous():
    assert mono(P2=1, P3=1, P6=-1).is_homogeneous(-1)
    assert PLaurent().is_homogeneous(17)
    assert not (P(1) + P(2)).is_homogeneous(1)


# -- limit transform ---------------------------------------------------------------

def sympy_limit(key: ExpKey, e0: int):
    """lim_{x->1} (1-x)^e0 * prod (P_j/(1-x^j))^e_j, symbolically."""
    x = sympy.Symbol("x")
    expr = (1 - x) ** e0
    syms = {}
    for j, e in key.exps:
        syms[j] = sympy.Symbol(f"P{j}", positive=True)
        expr *= (syms[j] / (1 - x**j)) ** e
    lim = sympy.limit(sympy.cancel(expr), x, 1)
    mono_part = sympy.Integer(1)
    for j, e in key.exps:
        mono_part *= syms[j] ** e
    return sympy.nsimplify(lim / mono_part)


def test_limit_examples():
    assert limit_transform(mono(P2=1, P3=1, P6=-1), 1) == mono(P2=1, P3=1, P6=-1)
    with pytest.raises(DivergenceError) as exc:
        limit_transform(P(1) * P(2), 1)
    assert exc.value.key == ExpKey.of({1: 1, 2: 1})
    assert limit_transform(mono(P1=4, P3=-2), 2) == mono(9, P1=4, P3=-2)
    assert limit_transform(mono(P1=2, P3=-1) + P(6, -1), 1) == mono(3, P1=2, P3=-1)


@pytest.mark.parametrize("exps, e0", [
    ({2: 1, 3: 1, 6: -1}, 1),
    ({1: 4, 3: -2}, 2),
    ({1: 2, 3: -1}, 1),
    ({2: 3, 5: -1}, 2),
    ({1: 1, 2: 1, 5: 1, 10: -1}, 2),
    ({4: 2, 6: -1}, 1),
])
def test_limit_matches_sympy(exps, e0):
    key = ExpKey.of(exps)
    got = limit_transform(PLaurent({key: 1}), e0).coefficient(key)
    want = sympy_limit(key, e0)
    assert sympy.Rational(got.numerator, got.denominator) == want


def test_limit_below_e0_vanishes_in_sympy():
    key = ExpKey.of({6: -1})
    assert sympy_limit(key, 1) == 0
    assert not limit_transform(PLaurent({key: 1}), 1)


@settings(max_examples=50, deadline=None)
@given(plaurents, plaurents, st.integers(-3, 3), st.integers(-3, 3))
def test_limit_linear(Fp, G, a, b):
    e0 = max([k.exponent_sum for k in (*Fp.keys(), *G.keys())] + [0])
    lhs = limit_transform(Fp.scale(a) + G.scale(b), e0)
    assert lhs == limit_transform(Fp, e0).scale(a) + limit_transform(G, e0).scale(b)


# -- scalar and series substitutions -------------------------------------------------

def test_substitute_scalar_examples():
    assert substitute_scalar(TABLE1_G2) == -1
    assert substitute_scalar(mono(P1=1, P2=-1), {1: 2, 2: 4}) == F(1, 2)
    assert substitute_scalar(PLaurent(), {3: 7}) == 0


def test_substitute_scalar_zero_negative_power():
    with pytest.raises(ZeroDivisionError):
        substitute_scalar(P(2, -1), {2: 0})


@settings(max_examples=50, deadline=None)
@given(plaurents)
def test_substitute_scalar_is_coefficient_sum(Fp):
    assert substitute_scalar(Fp) == sum(Fp.terms.values(), F(0))


def test_P1_series_examples():
    assert substitute_P1_series(P(1, 2)) == [1, 2, 1]
    assert substitute_P1_series(mono(P1=3, P2=-2)) == [1, 3, 3, 1]
    assert substitute_P1_series(P(1, 2), 4) == [1, 2, 1, 0, 0]
    with pytest.raises(ValueError):
        substitute_P1_series(P(1, -1))


# -- expansion into symmetric functions -----------------------------------------------

def sympy_expand(Fp: PLaurent, degree: int) -> TruncatedSymFunc:
    """Series expansion by sympy with a grading variable t (p_j -> t^j p_j)."""
    t = sympy.Symbol("t")
    ps = {j: sympy.Symbol(f"p{j}") for j in range(1, degree + 1)}
    expr = 0
    for k, c in Fp.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for j, e in k.exps:
            if j > degree:
                continue
            term *= (1 + t**j * ps[j]) ** e
        expr += term
    series = sympy.series(expr, t, 0, degree + 1).removeO()
    poly = sympy.Poly(sympy.expand(series).subs(t, 1), *ps.values())
    terms = {}
    for monom, c in poly.terms():
        key = tuple((j, m) for j, m in zip(ps, monom) if m)
        terms[key] = Fraction(int(sympy.numer(c)), int(sympy.denom(c)))
    return TruncatedSymFunc(terms, degree)


def test_expand_examples():
    assert expand_to_symfunc(P(3), 4) == p(3, 4) + 1
    assert expand_to_symfunc(P(2, -1), 4) == 1 - p(2, 4) + p(2, 4) ** 2
    assert expand_to_symfunc(TABLE1_G2, 5).constant_term() == substitute_scalar(TABLE1_G2)


@pytest.mark.parametrize("Fp", [TABLE1_G2, mono(2, P1=3, P2=-2) + mono(P4=-3, P1=1),
                                mono(F(5, 7), P1=-2, P3=2)])
def test_expand_matches_sympy(Fp):
    assert expand_to_symfunc(Fp, 5) == sympy_expand(Fp, 5)


@settings(max_examples=40, deadline=None)
@given(plaurents, plaurents)
def test_expand_is_ring_map(Fp, G):
    D = 6
    assert expand_to_symfunc(Fp * G, D) == expand_to_symfunc(Fp, D) * expand_to_symfunc(G, D)


# -- rendering -----------------------------------------------------------------------

def test_render_examples():
    f = mono(F(-1, 6), P2=1, P3=1, P6=-1)
    assert render(f, "text") == "-1/6 * P2*P3/P6"
    assert render(f, "json") == '{"terms":[{"coeff":"-1/6","exps":{"2":1,"3":1,"6":-1}}]}'
    assert render(PLaurent(), "text") == "0"
    assert render(PLaurent(), "json") == '{"terms":[]}'


def test_render_text_table_row():
    g3 = mono(F(1, 3), P1=1, P3=1, P6=-1) + mono(F(-1, 3), P1=4, P2=-3)
    assert render(g3) == "1/3 * P1*P3/P6 - 1/3 * P1^4/P2^3"


def test_render_misc():
    assert render(mono(P1=1, P2=1, P3=1, P6=-2)) == "P1*P2*P3/P6^2"
    assert render(mono(-1, P1=1, P2=-1, P3=-1)) == "-P1/(P2*P3)"
    assert render(PLaurent.constant(F(3, 2)) + P(6, -1)) == "1/P6 + 3/2"
    assert (render(mono(F(-1, 6), P2=1, P3=1, P6=-1), "latex")
            == r"- \frac{1}{6} \frac{P_{2} P_{3}}{P_{6}}")


def test_json_canonical_order_and_keys():
    Fp = P(10, -1) * P(5) * P(2) * P(1) + mono(3, P1=3, P5=-1)
    obj = json.loads(render(Fp, "json"))
    assert [list(t["exps"]) for t in obj["terms"]] == [["1", "2", "5", "10"], ["1", "5"]]


@settings(max_examples=80, deadline=None)
@given(plaurents)
def test_json_roundtrip(Fp):
    assert parse_json(render(Fp, "json")) == Fp


def test_text_render_deterministic():
    rng = random.Random(1)
    items = [(ExpKey.of({rng.randint(1, 6): rng.randint(-2, 2), 7: 1}), F(rng.randint(1, 9)))
             for _ in range(10)]
    a = PLaurent(items)
    b = PLaurent(list(reversed(items)))
    assert render(a) == render(b)
