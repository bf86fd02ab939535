from fractions import Fraction

from hypothesis import strategies as st

from picardchi.symfunc import TruncatedSymFunc, partitions


def _keys(degree, positive):
    keys = [] if positive else [()]
    for n in range(1, degree + 1):
        for lam in partitions(n):
            keys.append(tuple(sorted({i: lam.count(i) for i in lam}.items())))
    return keys


def symfuncs(degree, positive=True, max_terms=4):
    """Hypothesis strategy for sparse truncated symmetric functions."""
    coeff = st.builds(Fraction, st.integers(-4, 4), st.integers(1, 3))
    term = st.tuples(st.sampled_from(_keys(degree, positive)), coeff)
    return st.lists(term, min_size=1, max_size=max_terms).map(
        lambda ts: TruncatedSymFunc(ts, degree))
