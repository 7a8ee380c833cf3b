"""
The curve y^2 = x^3 + x and a divisibility
==========================================

For p = 4k + 1 the Deuring coefficient of y^2 = x^3 + x is the central
binomial coefficient binom(2k, k).  Comparing it with ell_p gives
k^k = 1 (mod p), i.e. 4k + 1 divides k^k - 1 whenever 4k + 1 is prime.
"""

from math import comb

from supersingular import check_curve, find_irreducible, special_curve_check
from supersingular.curve import CurveParams

for k in (1, 3, 4, 7, 9, 10, 13):
    p = 4 * k + 1
    F = find_irreducible(p, 1)
    r = check_curve(CurveParams(F, F(1), F(0)), structure=False)
    print(f"k={k:>2} p={p:>2}: ell_p = {r.ell_p!s:>2}, binom(2k,k) mod p = {comb(2 * k, k) % p:>2}, "
          f"k^k mod p = {pow(k, k, p)}, supersingular: {r.ss_oracle}")

rows = special_curve_check(10**4)
print(f"{len(rows)} primes 4k+1 with k <= 10^4, failures: {sum(not ok for *_, ok in rows)}")
