"""Coefficients alpha_{r,s} of the top x-terms of psi_p over Z.

Writing psi_p = sum_t beta_t(A, B) x^t with beta_t = sum alpha_{r,s} A^r B^s
(2r + 3s = (p^2 - 1)/2 - t), the alphas with d = 2r + 3s small satisfy a
two-term recurrence modulo p^2 in the p-local integers:

    d(d + 1/2) alpha_{r,s} = -(d - 1)(d - 3/2) alpha_{r-1,s}
                             - (d - 3/2)(d - 5/2) alpha_{r,s-1}   (mod p^2)

for 0 < d < q = (p - 1)/2, and one more step at d = q holds modulo p after
cancelling the factor p hidden in d + 1/2 = p/2.  p-local integers modulo p^2
are represented as Z/p^2; halves are ``inv(2)``.  The module also carries the
closed forms of that recurrence, the multinomial congruence linking them to
the Deuring coefficient, and the k^k = 1 (mod 4k + 1) corollary.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .poly import ABPoly
from .ring import ModInt, inv, is_prime, pow_mod

__all__ = [
    "Unreduced",
    "AlphaTable",
    "multinomial_mod",
    "weighted_pairs",
    "alpha_recurrence",
    "alpha_closed",
    "alpha_closed_boundary",
    "ell_from_alphas",
    "step3_congruence_check",
    "step3_range",
    "special_curve_check",
]


class Unreduced(ArithmeticError):
    """A multinomial was requested outside the range where p cannot appear in a factorial."""


@dataclass
class AlphaTable:
    p: int
    q: int
    inner: dict[tuple[int, int], ModInt] = field(default_factory=dict)
    boundary: dict[tuple[int, int], ModInt] = field(default_factory=dict)

    def get(self, r: int, s: int) -> ModInt:
        """alpha_{r,s} mod p^2 for an inner pair; zero for negative indices."""
        if r < 0 or s < 0:
            return ModInt(0, self.p * self.p)
        return self.inner[(r, s)]


def weighted_pairs(d: int) -> list[tuple[int, int]]:
    """All (r, s) >= 0 with 2r + 3s = d, by increasing r."""
    return [(r, (d - 2 * r) // 3) for r in range(d // 2 + 1) if (d - 2 * r) % 3 == 0]


def multinomial_mod(n: int, parts: tuple[int, int, int], m: int) -> ModInt:
    """n! / (a! b! c!) modulo m, from factorial products.

    Only n below the least prime factor of m is accepted, so no factorial
    involved can contain that prime; anything larger raises :class:`Unreduced`.
    """
    a, b, c = parts
    if min(parts) < 0 or a + b + c != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    if n >= _least_prime_factor(m):
        raise Unreduced(f"multinomial({n}; {parts}) is outside the range reducible modulo {m}")
    a, b, c = sorted(parts, reverse=True)
    num = 1
    for i in range(a + 1, n + 1):
        num = num * i % m
    den = 1
    for i in range(2, b + 1):
        den = den * i % m
    for i in range(2, c + 1):
        den = den * i % m
    return ModInt(num, m) * inv(ModInt(den, m))


def _least_prime_factor(m: int) -> int:
    d = 2
    while d * d <= m:
        if m % d == 0:
            return d
        d += 1
    return m


def _check_p(p: int, least: int = 5) -> None:
    if p < least or not is_prime(p):
        raise ValueError(f"p must be a prime >= {least}, got {p}")


def _recurrence_rhs(table: AlphaTable, r: int, s: int, d: int) -> ModInt:
    """-(d - 1)(d - 3/2) a_{r-1,s} - (d - 3/2)(d - 5/2) a_{r,s-1}  in Z/p^2."""
    m = table.p * table.p
    half = inv(ModInt(2, m))
    c1 = ModInt(d - 1, m) * ModInt(2 * d - 3, m) * half
    c2 = ModInt(2 * d - 3, m) * ModInt(2 * d - 5, m) * half * half
    return -(c1 * table.get(r - 1, s)) - c2 * table.get(r, s - 1)


def alpha_recurrence(p: int) -> AlphaTable:
    """Solve the recurrence for every pair with 2r + 3s <= q.

    Inner pairs (d < q) are exact modulo p^2.  At d = q the left factor
    d(d + 1/2) = d p / 2 is divisible by p once; the right side is then
    divisible by p as well, and dividing it out gives alpha mod p.
    """
    _check_p(p)
    q = (p - 1) // 2
    m = p * p
    table = AlphaTable(p, q)
    table.inner[(0, 0)] = ModInt(p, m)
    for d in range(1, q):
        # d and 2d + 1 are both prime to p here
        lead = inv(ModInt(d, m) * ModInt(2 * d + 1, m) * inv(ModInt(2, m)))
        for r, s in weighted_pairs(d):
            table.inner[(r, s)] = _recurrence_rhs(table, r, s, d) * lead
    for r, s in weighted_pairs(q):
        rhs = _recurrence_rhs(table, r, s, q).residue
        if rhs % p:
            raise ArithmeticError(f"boundary right side for ({r},{s}) not divisible by p={p}")
        # alpha = rhs / (q p / 2) = (rhs / p) * 2 / q  (mod p)
        table.boundary[(r, s)] = ModInt(rhs // p, p) * 2 * inv(ModInt(q, p))
    return table


def alpha_closed(r: int, s: int, p: int) -> ModInt:
    """(-1/4)^{r+s} p/(4r+6s+1) multinomial(2r+2s; r+s, r, s)  mod p^2, for 2r + 3s < q."""
    _check_p(p, least=3)
    q = (p - 1) // 2
    if r < 0 or s < 0 or 2 * r + 3 * s >= q:
        raise ValueError(f"({r},{s}) is not an inner pair for p={p}")
    m = p * p
    sign = pow_mod(-inv(ModInt(4, m)), r + s)
    return sign * p * inv(ModInt(4 * r + 6 * s + 1, m)) * multinomial_mod(
        2 * r + 2 * s, (r + s, r, s), m
    )


def alpha_closed_boundary(r: int, s: int, p: int) -> ModInt:
    """(-1/4)^{r+s} multinomial(2r+2s; r+s, r, s)  mod p, for 2r + 3s = q."""
    _check_p(p, least=3)
    q = (p - 1) // 2
    if r < 0 or s < 0 or 2 * r + 3 * s != q:
        raise ValueError(f"({r},{s}) is not a boundary pair for p={p}")
    sign = pow_mod(-inv(ModInt(4, p)), r + s)
    return sign * multinomial_mod(2 * r + 2 * s, (r + s, r, s), p)


def ell_from_alphas(p: int) -> ABPoly:
    """ell_p mod p assembled from the boundary closed form."""
    _check_p(p, least=3)
    q = (p - 1) // 2
    return ABPoly(
        {(r, s): alpha_closed_boundary(r, s, p).residue for r, s in weighted_pairs(q)}, p
    )


def step3_range(p: int) -> range:
    """k with q/3 <= k <= q/2, i.e. j = 3k - q ranges over the Deuring index set."""
    q = (p - 1) // 2
    return range(-(-q // 3), q // 2 + 1)


def step3_congruence_check(p: int) -> bool:
    """q!/(q-k)! == (-1/4)^k (2k)!/k!  (mod p) for every k in :func:`step3_range`."""
    _check_p(p)
    q = (p - 1) // 2
    minus_quarter = -inv(ModInt(4, p))
    for k in step3_range(p):
        lhs = ModInt(1, p)
        for i in range(q - k + 1, q + 1):
            lhs = lhs * i
        rhs = pow_mod(minus_quarter, k)
        for i in range(k + 1, 2 * k + 1):
            rhs = rhs * i
        if lhs != rhs:
            return False
    return True


def special_curve_check(k_max: int) -> list[tuple[int, int, bool]]:
    """(k, 4k + 1, whether 4k + 1 divides k^k - 1) for each k <= k_max with 4k + 1 prime."""
    out = []
    for k in range(1, k_max + 1):
        p = 4 * k + 1
        if is_prime(p):
            out.append((k, p, pow_mod(ModInt(k, p), k) == 1))
    return out
