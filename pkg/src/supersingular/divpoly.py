"""Division polynomials of y^2 = x^3 + Ax + B with y stripped out.

We write psi_m = y^eps(m) * f_m, eps(m) = 1 for even m and 0 otherwise, and
substitute y^2 = R = x^3 + Ax + B.  With that convention the standard
recursions become

    f_{2m+1} = R^2 f_{m+2} f_m^3 - f_{m-1} f_{m+1}^3      (m even)
    f_{2m+1} = f_{m+2} f_m^3 - R^2 f_{m-1} f_{m+1}^3      (m odd)
    f_{2m}   = f_m (f_{m-1}^2 f_{m+2} - f_{m-2} f_{m+1}^2) / 2

The same code runs numerically (A, B ring elements, dense :class:`Poly`
entries) or symbolically (A, B formal, :class:`XABPoly` entries with
coefficients in Z or Z/m).
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import INFINITY, AffinePoint, CurveParams, scalar_mul
from .poly import ZERO_DEGREE, Poly, XABPoly
from .ring import ZZ, FieldElement, FieldSpec, IntegerRing, ResidueRing

__all__ = [
    "DivPolyTable",
    "build_table",
    "symbolic_table",
    "curve_table",
    "required_indices",
    "phi",
    "psi_squared",
    "eval_psi_at_point",
    "StructureReport",
    "xp_structure_report",
    "x_mul_m_identity_check",
]


def required_indices(targets) -> set[int]:
    """Closure of the indices the recursion touches when computing ``targets``."""
    need: set[int] = set()
    stack = list(targets)
    while stack:
        n = stack.pop()
        if n in need:
            continue
        need.add(n)
        if n <= 4:
            continue
        m = n // 2
        deps = range(m - 1, m + 3) if n % 2 else range(m - 2, m + 3)
        stack.extend(d for d in deps if d not in need)
    need.update(range(5))
    return need


class DivPolyTable:
    """Memoized f_0..f_n for one curve context.

    ``entries`` holds only the indices that were computed; with the default
    ``targets=None`` that is every index 0..n.
    """

    def __init__(self, A, B, x, one, n: int, targets=None, *, ring=None, symbolic=False):
        self.A = A
        self.B = B
        self.ring = ring
        self.symbolic = symbolic
        self.n = n
        self._x = x
        self._one = one
        self.R = self._assemble([B, A, 0, 1])
        indices = range(n + 1) if targets is None else sorted(required_indices(targets))
        self.entries: dict[int, Poly | XABPoly] = {}
        self._fill(indices, x, one)

    def _assemble(self, coeffs):
        """sum of coeffs[i] x^i, coefficients being expressions in A and B."""
        if not self.symbolic:
            return Poly.from_coeffs(self.ring, coeffs)
        total = self._one * 0
        for i, c in enumerate(coeffs):
            if not isinstance(c, int) or c:
                total = total + c * self._x**i
        return total

    def _fill(self, indices, x, one) -> None:
        A, B, R = self.A, self.B, self.R
        f = self.entries
        f[0] = one * 0
        f[1] = one
        f[2] = one * 2
        f[3] = self._assemble([-(A**2), 12 * B, 6 * A, 0, 3])
        # 2 * (2x^6 + 10Ax^4 + 40Bx^3 - 10A^2x^2 - 8ABx - 2(A^3 + 8B^2))
        f[4] = self._assemble(
            [-4 * (A**3 + 8 * B**2), -16 * A * B, -20 * A**2, 80 * B, 20 * A, 0, 4]
        )
        R2 = None
        for n in indices:
            if n in f:
                continue
            m = n // 2
            if n % 2:
                if R2 is None:
                    R2 = R * R
                left = f[m + 2] * f[m] ** 3
                right = f[m - 1] * f[m + 1] ** 3
                if m % 2 == 0:
                    f[n] = R2 * left - right
                else:
                    f[n] = left - R2 * right
            else:
                inner = f[m - 1] ** 2 * f[m + 2] - f[m - 2] * f[m + 1] ** 2
                f[n] = (f[m] * inner).exact_div_const(2)

    def __getitem__(self, m: int):
        try:
            return self.entries[m]
        except KeyError:
            raise KeyError(f"f_{m} was not computed in this table") from None

    def __contains__(self, m: int) -> bool:
        return m in self.entries

    def x(self):
        return self._x


def build_table(A, B, n: int, ring=None, targets=None) -> DivPolyTable:
    """Division polynomials f_0..f_n.

    Numeric mode: ``A``, ``B`` are elements of ``ring`` (a coefficient ring
    from :mod:`supersingular.ring`; inferred from field elements).  Symbolic
    mode: pass ``A = B = None`` and ``ring`` either ``ZZ`` (exact) or an
    integer modulus / :class:`ResidueRing`.

    ``targets`` restricts the fill to the indices needed for those targets.
    """
    if A is None and B is None:
        return symbolic_table(n, ring, targets)
    if ring is None:
        if isinstance(A, FieldElement):
            ring = A.spec
        else:
            raise ValueError("ring must be given for non-field coefficients")
    x = Poly.x(ring)
    one = Poly.constant(ring, 1)
    return DivPolyTable(ring_elem(ring, A), ring_elem(ring, B), x, one, n, targets, ring=ring)


def ring_elem(ring, c):
    return ring(c) if isinstance(ring, FieldSpec) else ring.element(ring.to_row(c))


def symbolic_table(n: int, ring=None, targets=None) -> DivPolyTable:
    """f_m in (x, A, B); ``ring`` is ZZ/None for exact integers, or a modulus."""
    if ring is None or isinstance(ring, IntegerRing):
        modulus = None
    elif isinstance(ring, ResidueRing):
        modulus = ring.modulus
    else:
        modulus = int(ring)
    x = XABPoly.x(modulus)
    one = XABPoly.constant(1, modulus)
    return DivPolyTable(
        XABPoly.A(modulus), XABPoly.B(modulus), x, one, n, targets,
        ring=ZZ if modulus is None else ResidueRing(modulus), symbolic=True,
    )


def curve_table(E: CurveParams, n: int, targets=None) -> DivPolyTable:
    return build_table(E.A, E.B, n, E.field, targets)


def _eps(m: int) -> int:
    return 1 if m % 2 == 0 else 0


def psi_squared(m: int, table: DivPolyTable):
    """psi_m^2 as an x-polynomial: R^eps(m) f_m^2."""
    f = table[m]
    sq = f * f
    return table.R * sq if _eps(m) else sq


def phi(m: int, table: DivPolyTable):
    """phi_m = x psi_m^2 - psi_{m-1} psi_{m+1}, reduced to an x-polynomial."""
    if m < 1:
        raise ValueError("phi_m needs m >= 1")
    prod = table[m - 1] * table[m + 1]
    if _eps(m + 1):
        prod = table.R * prod
    return table.x() * psi_squared(m, table) - prod


def eval_psi_at_point(m: int, P: AffinePoint, table: DivPolyTable) -> FieldElement:
    """psi_m(P) = y_P^eps(m) f_m(x_P)."""
    val = table[m].evaluate(P.x)
    return val * P.y if _eps(m) else val


@dataclass(frozen=True)
class StructureReport:
    degree: int | float
    all_exponents_multiple_of_p: bool
    is_constant: bool
    is_zero: bool

    def consistent_with(self, supersingular: bool, p: int) -> bool:
        """Ordinary: degree p(p-1)/2 and f_p in F[x^p]; supersingular: nonzero constant."""
        if supersingular:
            return self.is_constant and not self.is_zero
        return self.degree == p * (p - 1) // 2 and self.all_exponents_multiple_of_p


def xp_structure_report(f_p: Poly, p: int) -> StructureReport:
    exps = f_p.exponents()
    return StructureReport(
        degree=f_p.degree,
        all_exponents_multiple_of_p=all(e % p == 0 for e in exps),
        is_constant=f_p.degree in (0, ZERO_DEGREE),
        is_zero=f_p.is_zero(),
    )


def x_mul_m_identity_check(m: int, P: AffinePoint, table: DivPolyTable, E: CurveParams) -> bool:
    """Whether x([m]P) == phi_m(x_P) / psi_m(P)^2."""
    if m < 1:
        raise ValueError("m must be positive")
    psi = eval_psi_at_point(m, P, table)
    if psi.is_zero():
        raise ValueError(f"psi_{m} vanishes at {P}")
    Q = scalar_mul(m, P, E)
    if Q is INFINITY:
        return False
    return Q.x == phi(m, table).evaluate(P.x) / (psi * psi)
