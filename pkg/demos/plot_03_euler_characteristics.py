"""
Numerical and equivariant Euler characteristics
===============================================

Setting every P_j to 1 gives chi(Pic_g).  Sending P_1 -> 1 + t and the
other P_j -> 1 gives the exponential generating function of chi(Pic_{g,n}),
which vanishes past n = 2g + 2 (topological) or n = g + 1 (weight zero).
The S_n-equivariant characteristic does not vanish there.
"""

from picardchi import chi_pic, chi_series, equivariant_chi
from picardchi.symfunc import specialize_rk

for g in (2, 3, 4):
    print(g, chi_pic(g, "weight0"), chi_pic(g, "top"))

g = 2
for kind, cutoff in (("top", 2 * g + 2), ("weight0", g + 1)):
    series = chi_series(g, kind, cutoff + 3)
    print(kind, [str(v) for v in series])

# degree-7 Frobenius characteristic for g = 2: nonzero, but its rank is 0
e7 = equivariant_chi(2, "top", 7)
print(len(e7), "power-sum terms; rank coefficient", specialize_rk(e7)[7])
print(equivariant_chi(2, "top", 3))
