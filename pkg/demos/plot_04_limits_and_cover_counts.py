"""
The x -> 1 limit and cyclic-cover counts
========================================

``limit_transform`` evaluates lim (1-x)^e0 F(P_k -> P_k/(1 - x^k)) monomial by
monomial.  ``n_count_closed`` and ``n_count_oracle`` compute the same count
of residue tuples in two unrelated ways.
"""

from picardchi import PLaurent, limit_transform, n_count_closed, n_count_oracle
from picardchi.plaurent import DivergenceError

P = PLaurent.P
print(limit_transform(P(1, 4) * P(3, -2), 2))            # 9 * P1^4/P3^2
print(limit_transform(P(1, 2) * P(3, -1) + P(6, -1), 1))  # lower exponent sum drops
try:
    limit_transform(P(1) * P(2), 1)
except DivergenceError as exc:
    print("diverges:", exc)

for r, k in [(10, {1: 1, 2: 1, 5: 1}), (8, {1: 2, 4: 1}), (12, {1: 1, 4: 1, 6: 1, 3: 1})]:
    print(r, k, n_count_closed(r, k), n_count_oracle(r, k))
