"""
Plethysm, Exp/Log and the transform p_n -> (p_n + x^n)/(1 - x^n)
================================================================

Symmetric functions are stored in the power-sum basis, truncated at a total
degree D.  The marked ring adds a variable x truncated at order X.
"""

from picardchi.symfunc import (exp_plethystic, log_plethystic, p, plethysm, specialize_inv,
                               transform_T, transform_T_composite)

D = 4
p1, p2 = p(1, D), p(2, D)

# plethysm by a power sum rescales indices
print(plethysm(p2, p1 + p2 / 2))                 # p2 + 1/2 * p4

# Exp(p_1) = h_1 + h_2 + ...; its degree-2 part is (p_1^2 + p_2)/2
E = exp_plethystic(p1)
print(E.homogeneous_part(2))
print([str(c) for c in specialize_inv(E)])       # 0 1 1 1 1

# Log(1 + .) undoes Exp
print(log_plethystic(E) == p1)

# the transform, and the same thing assembled from inv-delta, Exp and Log
f = p1 * p1 + p2 / 3 + 1
X = 3
print(transform_T(f, X))
print(transform_T(f, X) == transform_T_composite(f, X))
