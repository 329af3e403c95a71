"""Multiplier ideals from the Newton polyhedron, checked against b_f.

The smallest root of b_f(-s) is the log canonical threshold, and every
jumping coefficient in [lct, lct + 1) is a root. The converse can fail.
"""

from fractions import Fraction

from bsato import ExponentMatrix, check_roots_and_jumps, jumping_coefficients, multiplier_membership, newton_polyhedron

# %% Facets of the Newton polyhedron of (x^2, y^2)
A = ExponentMatrix.from_monomials([(2, 0), (0, 2)])
P = newton_polyhedron(A)
print("facets:", P.facets)

# %% Jumping numbers with their witnesses
for value, witness in jumping_coefficients(P, 3):
    print(f"  {value} at x^{witness}")

# %% Which monomials lie in J(alpha * Z)?
for alpha in (Fraction(1), Fraction(4, 3), Fraction(3, 2)):
    inside = [nu for nu in [(0, 0), (1, 0), (1, 1), (2, 0)] if multiplier_membership(P, nu, alpha)]
    print(f"  alpha={alpha}: {inside}")

# %% Comparing with the roots of b_f
# For f_i = x_i * x1 x2 x3 the root 5/4 is not a jumping number.
B = ExponentMatrix.from_monomials([(2, 1, 1), (1, 2, 1), (1, 1, 2)])
report = check_roots_and_jumps(B)
chk = report.check
print("b_f(s) =", report.bf)
print("lct =", report.lct, "matches smallest root:", chk.lct_matches)
print("jumps in [lct, lct+1):", [str(v) for v in chk.window_jumps])
print("roots there that are not jumps:", [str(v) for v in chk.roots_not_jumps])
