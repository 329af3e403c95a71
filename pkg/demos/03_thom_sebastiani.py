"""Ideals in disjoint sets of variables.

For h = f x g the roots of b_h(-s) are sums of roots, and the multiplicity
of a sum is the largest n + m - 1 over its decompositions.
"""

from bsato import ExponentMatrix, bernstein_sato, compose_thom_sebastiani

# %% x^2 and y^3 separately
f = bernstein_sato(ExponentMatrix(((2,),))).bf
g = bernstein_sato(ExponentMatrix(((3,),))).bf
print("x^2:", f)
print("y^3:", g)

# %% The composition formula against a direct computation on (x^2, y^3)
print("composed:", compose_thom_sebastiani(f, g))
print("direct:  ", bernstein_sato(ExponentMatrix.from_monomials([(2, 0), (0, 3)])).bf)
