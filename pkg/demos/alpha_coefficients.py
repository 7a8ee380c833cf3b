"""
Top coefficients of psi_p modulo p^2
====================================

Write the top of psi_p as a sum of alpha_{r,s} A^r B^s x^t.  Modulo p^2 the
alphas obey a two-term recurrence in d = 2r + 3s, and the recurrence has a
closed form.  At d = (p-1)/2 the recurrence loses a factor p and the values
only survive mod p; those boundary values are exactly the coefficients of
ell_p mod p.
"""

from supersingular import alpha_closed, alpha_recurrence, ell_from_alphas, render, symbolic_table
from supersingular.alphas import weighted_pairs

p = 13
q = (p - 1) // 2
table = alpha_recurrence(p)

print(f"p = {p}: inner pairs mod {p * p}")
print("  (r,s)  d  recurrence  closed")
for (r, s), v in table.inner.items():
    print(f"  ({r},{s})  {2 * r + 3 * s}  {v.residue:>10}  {alpha_closed(r, s, p).residue:>6}")

print(f"boundary pairs (d = {q}) mod {p}:", {rs: v.residue for rs, v in table.boundary.items()})
print("ell_p from the boundary:", render(ell_from_alphas(p)))

# the same numbers read off the exact integer polynomial
f = symbolic_table(p, targets=(p,))[p]
top = (p * p - 1) // 2
for d in range(q + 1):
    m = p * p if d < q else p
    row = {rs: f.coeff(top - d).coeff(*rs) % m for rs in weighted_pairs(d)}
    print(f"  exact coefficients at x^{top - d} mod {m}: {row}")
