"""Verification suites behind ``picardchi verify``.

Each suite returns a :class:`VerificationReport`; a report passes iff all
of its checks pass.  Randomised suites draw from ``random.Random(seed)`` so
reruns are reproducible.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from . import formulas as fm
from .plaurent import (ExpKey, PLaurent, expand_to_symfunc, limit_transform, parse_json,
                       render, substitute_scalar, from_json_obj)
from .symfunc import (TruncatedSymFunc, complete_homogeneous, exp_plethystic, log_plethystic,
                      partitions, plethysm, specialize_inv, transform_T, transform_T_composite)

TABLE_FILES = {"weight0": "table1_weight0.json", "top": "table2_top.json"}


@dataclass
class Check:
    check_id: str
    anchor: str
    passed: bool
    detail: str = ""

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)

    def add(self, check_id: str, anchor: str, passed: bool, detail: str = "") -> Check:
        if any(c.check_id == check_id for c in self.checks):
            raise ValueError(f"duplicate check id {check_id!r}")
        c = Check(check_id, anchor, bool(passed), detail)
        self.checks.append(c)
        return c

    def extend(self, other: "VerificationReport") -> None:
        for c in other.checks:
            self.add(c.check_id, c.anchor, c.passed, c.detail)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        return [f"{c.status.upper():4}  {c.check_id}  [{c.anchor}]  {c.detail}".rstrip()
                for c in self.checks]

    def to_json(self) -> str:
        return json.dumps({"passed": self.passed, "checks": [
            {"check_id": c.check_id, "anchor": c.anchor, "status": c.status,
             "detail": c.detail} for c in self.checks]}, indent=1)


def load_table(kind: str) -> dict[int, PLaurent]:
    """Golden rows transcribed from the published tables, keyed by genus."""
    name = TABLE_FILES[fm._kind(kind)]
    text = resources.files("picardchi").joinpath("data", name).read_text()
    return {int(g): from_json_obj(obj) for g, obj in json.loads(text).items()}


# ---------------------------------------------------------------------------
# random inputs

def random_symfunc(rng: random.Random, degree: int, n_terms: int = 4,
                   positive: bool = True) -> TruncatedSymFunc:
    """Sparse random element with small rational coefficients.

    ``positive`` keeps the constant term zero.
    """
    monos = [()] if not positive else []
    for n in range(1, degree + 1):
        for lam in partitions(n):
            monos.append(tuple(sorted({i: lam.count(i) for i in lam}.items())))
    terms = {}
    for _ in range(rng.randint(1, n_terms)):
        key = rng.choice(monos)
        terms[key] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    f = TruncatedSymFunc(terms, degree)
    if not f:
        f = TruncatedSymFunc.p(1, degree) if positive else TruncatedSymFunc.constant(1, degree)
    return f


def random_plaurent(rng: random.Random, n_terms: int = 3, max_index: int = 4,
                    max_exp: int = 3) -> PLaurent:
    terms = []
    for _ in range(rng.randint(0, n_terms)):
        exps = {j: rng.randint(-max_exp, max_exp) for j in rng.sample(range(1, max_index + 1), 2)}
        terms.append((ExpKey.of(exps), Fraction(rng.randint(-6, 6), rng.randint(1, 5))))
    return PLaurent(terms)


# ---------------------------------------------------------------------------
# suites

def suite_tables() -> VerificationReport:
    report = VerificationReport()
    for kind, label, anchor in (("weight0", "wt0", "weight-zero table"),
                                ("top", "top", "topological table")):
        for g, want in sorted(load_table(kind).items()):
            got = fm.jacobian(g, kind)
            ok = got.sorted_terms() == want.sorted_terms()
            detail = f"{len(got)} terms" if ok else f"got {got}; want {want}"
            report.add(f"table.{label}.g{g}", anchor, ok, detail)
    return report


def _count_failures(pred, cases) -> tuple[int, int, str]:
    bad, first = 0, ""
    n = 0
    for case in cases:
        n += 1
        if not pred(case):
            bad += 1
            if not first:
                first = f"; first failure: {case!r}"
    return n, bad, first


def suite_properties(seed: int = 0, depth: int = 6, instances: int = 50) -> VerificationReport:
    rng = random.Random(seed)
    D = depth
    report = VerificationReport()

    def record(check_id, anchor, pred, cases):
        n, bad, first = _count_failures(pred, cases)
        report.add(check_id, anchor, bad == 0, f"{n - bad}/{n} instances{first}")

    fs = [random_symfunc(rng, D, positive=False) for _ in range(instances)]
    record("symfunc.transform_composite", "transform via inv-delta, Exp and Log",
           lambda f: transform_T(f, D) == transform_T_composite(f, D), fs)

    pos = [random_symfunc(rng, D) for _ in range(instances)]
    record("symfunc.log_exp", "Log(1 + Exp f) = f",
           lambda f: log_plethystic(exp_plethystic(f)) == f, pos)
    record("symfunc.exp_log", "Exp(Log(1 + f)) = f",
           lambda f: exp_plethystic(log_plethystic(f)) == f, pos)

    triples = [tuple(random_symfunc(rng, D, n_terms=3) for _ in range(3))
               for _ in range(instances)]
    record("symfunc.plethysm_assoc", "plethysm associativity",
           lambda t: plethysm(plethysm(t[0], t[1]), t[2]) == plethysm(t[0], plethysm(t[1], t[2])),
           triples)

    p1 = TruncatedSymFunc.p(1, D)
    record("symfunc.plethysm_unit", "p_1 is a two-sided unit",
           lambda f: plethysm(f, p1) == f and plethysm(p1, f) == f, pos)

    pairs = list(zip(pos, reversed(pos)))
    record("symfunc.exp_additive", "1 + Exp(f + g) = (1 + Exp f)(1 + Exp g)",
           lambda fg: 1 + exp_plethystic(fg[0] + fg[1])
           == (1 + exp_plethystic(fg[0])) * (1 + exp_plethystic(fg[1])), pairs)

    e1 = exp_plethystic(p1)
    report.add("symfunc.exp_h_sum", "Exp(p_1) = sum of h_n",
               e1 == sum((complete_homogeneous(n, D) for n in range(1, D + 1)),
                         TruncatedSymFunc.zero(D)))
    report.add("symfunc.inv_exp", "inv(Exp p_1) = sum x^n",
               specialize_inv(e1) == [0] + [1] * D)

    lps = [(random_plaurent(rng), random_plaurent(rng)) for _ in range(instances)]
    record("plaurent.expand_hom", "P_j = 1 + p_j is a ring map",
           lambda fg: expand_to_symfunc(fg[0] * fg[1], D)
           == expand_to_symfunc(fg[0], D) * expand_to_symfunc(fg[1], D), lps)
    record("plaurent.json_roundtrip", "json render/parse",
           lambda fg: parse_json(render(fg[0], "json")) == fg[0], lps)
    record("plaurent.scalar_sum", "all P_j = 1 gives the coefficient sum",
           lambda fg: substitute_scalar(fg[0]) == sum(fg[0].terms.values(), Fraction(0)), lps)

    def linear(fg):
        a, b = Fraction(rng.randint(-3, 3), 2), Fraction(rng.randint(-3, 3), 3)
        F, G = fg
        e0 = max([k.exponent_sum for k in (*F.keys(), *G.keys())] + [0])
        return (limit_transform(F.scale(a) + G.scale(b), e0)
                == limit_transform(F, e0).scale(a) + limit_transform(G, e0).scale(b))
    record("plaurent.limit_linear", "limit transform is linear", linear, lps)
    return report


def ncount_cases(max_r: int, max_weight: int = 6):
    """All ``(r, k)`` with ``r <= max_r``, ``sum k <= max_weight`` and
    ``k_i > 0`` only for proper divisors ``i`` of ``r``."""
    from .numtheory import divisors

    def rec(idx, left):
        if not idx:
            yield {}
            return
        for c in range(left + 1):
            for tail in rec(idx[1:], left - c):
                yield ({idx[0]: c, **tail} if c else tail)

    for r in range(2, max_r + 1):
        for k in rec(divisors(r)[:-1], max_weight):
            if k:
                yield r, k


def suite_ncount(depth: int = 14, max_genus: int = 6) -> VerificationReport:
    report = VerificationReport()
    cases = list(ncount_cases(depth))
    n, bad, first = _count_failures(
        lambda rk: fm.n_count_closed(*rk) == fm.n_count_oracle(*rk), cases)
    report.add(f"ncount.grid.r{depth}", "closed form vs residue DP",
               bad == 0, f"{n - bad}/{n} agree{first}")
    for g in range(2, max_genus + 1):
        cells = [(r, k) for r, _, k in fm.topological_cells(g)]
        n, bad, first = _count_failures(
            lambda rk: fm.n_count_closed(*rk) == fm.n_count_oracle(*rk), cells)
        report.add(f"ncount.top.g{g}", "closed form vs residue DP on formula cells",
                   bad == 0, f"{n - bad}/{n} agree{first}")
    return report


def suite_bounds(max_genus: int = 12) -> VerificationReport:
    report = VerificationReport()
    for g in range(2, max_genus + 1):
        m_max, k_max = fm.wz_enumeration_bounds(g)
        base = fm.weight_zero_jacobian(g, (m_max, k_max))
        doubled = fm.weight_zero_jacobian(g, (2 * m_max, 2 * k_max))
        report.add(f"bounds.g{g}", "weight-zero enumeration bounds", base == doubled,
                   f"m_max={m_max} k_max={k_max}, {len(base)} terms")
    return report


SUITES = ("tables", "properties", "ncount", "bounds")


def run_suite(name: str, seed: int = 0, depth: int = 6) -> VerificationReport:
    if name == "tables":
        return suite_tables()
    if name == "properties":
        return suite_properties(seed, depth)
    if name == "ncount":
        return suite_ncount(depth)
    if name == "bounds":
        return suite_bounds()
    if name == "all":
        report = VerificationReport()
        for s in SUITES:
            report.extend(run_suite(s, seed, depth))
        return report
    raise ValueError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")
