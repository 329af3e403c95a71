"""Bernstein-Sato polynomials of a few monomial ideals.

Each ideal is given by the exponent vectors of its generators. The
b-function comes out factored over Q, together with the codimension of the
subscheme and the shifted polynomial b_Z(s) = b_f(s - codim).
"""

from itertools import combinations

from bsato import ExponentMatrix, af_generators, bernstein_sato

# %% The ideal (yz, xz, xy) in three variables
A = ExponentMatrix.from_monomials([(0, 1, 1), (1, 0, 1), (1, 1, 0)])
res = bernstein_sato(A)
print("b_f(s)   =", res.bf)
print("expanded =", res.bf_expanded)
print("codim    =", res.codim, " b_Z(s) =", res.bz)

# %% The finite generating set behind it
# Each generator is a product of binomial factors in s1, s2, s3, one for
# every shift vector that survives the cone computation.
for g in af_generators(A):
    print("  ", g)

# %% All pairwise products x_i x_j in four variables
pairs = [tuple(int(k in c) for k in range(4)) for c in combinations(range(4), 2)]
print("pairwise, n=4:", bernstein_sato(ExponentMatrix.from_monomials(pairs)).bf)

# %% Same integral closure, different b-functions
for mons in ([(2, 0), (0, 2)], [(2, 0), (1, 1), (0, 2)]):
    print(mons, "->", bernstein_sato(ExponentMatrix.from_monomials(mons)).bf)
