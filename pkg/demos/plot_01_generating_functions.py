"""
Weight-zero and topological generating functions
================================================

The generating functions for Euler characteristics of the universal Picard
stack are finite Laurent polynomials in P_j = 1 + p_j.  This script computes
them for small genus and prints them in each output format.
"""

from picardchi import topological_jacobian, weight_zero_jacobian

# weight zero, genus 2 through 9
for g in range(2, 10):
    print(f"g={g}:", weight_zero_jacobian(g))

# topological, genus 2; every monomial has Laurent degree 2 - 2g = -2
J = topological_jacobian(2)
print(J.render("latex"))
print(J.render("json"))
print({k.laurent_degree for k in J.keys()}, {k.exponent_sum for k in J.keys()})

# the formulas keep going past the published range
print("wt0 g=12 has", len(weight_zero_jacobian(12)), "terms")
print("top g=6 has", len(topological_jacobian(6)), "terms")
