"""
The fifth division polynomial in characteristic 5
=================================================

Over F_5 the y-free part of psi_5 collapses to three terms.  The coefficient
of x^10 is 2A, so a curve y^2 = x^3 + Ax + B over F_5 is supersingular
exactly when A = 0.
"""

from supersingular import CurveParams, check_curve, find_irreducible, render, symbolic_table
from supersingular.curve import count_points, is_nonsingular

# f_5 with A and B kept as symbols, coefficients reduced mod 5
table = symbolic_table(5, 5)
f5 = table[5]
print("f_5 over F_5[A, B]:", render(f5))

# over Z the same coefficient is 62A
exact = symbolic_table(5)[5]
print("coefficient of x^10 over Z:", render(exact.coeff(10)))

# every nonsingular curve over F_5: the three verdicts side by side
F = find_irreducible(5, 1)
print()
print(" A  B   #E  ell_5  divpoly  deuring  trace")
for A in F.elements():
    for B in F.elements():
        if not is_nonsingular(A, B):
            continue
        E = CurveParams(F, A, B)
        r = check_curve(E)
        print(f"{A!s:>2} {B!s:>2} {count_points(E):>4} {r.ell_p!s:>6} "
              f"{r.ss_divpoly!s:>8} {r.ss_deuring!s:>8} {r.ss_oracle!s:>6}")

# on a supersingular curve f_5 is a nonzero constant
print()
print("f_5 on y^2 = x^3 + 1:", render(table[5].specialize(F, F(0), F(1))))
