"""Supersingularity criteria and the ell_p = c_p sweep.

``ell_p`` is the coefficient of x^{p(p-1)/2} in f_p; ``c_p`` is the
coefficient of x^{p-1} in (x^3 + Ax + B)^{(p-1)/2}.  Both can be evaluated
numerically over F_{p^k} or symbolically in (A, B).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .curve import (
    CurveParams,
    FieldTooLarge,
    is_nonsingular,
    is_supersingular_by_trace,
)
from .divpoly import StructureReport, build_table, curve_table, symbolic_table, xp_structure_report
from .poly import ABPoly, Poly, XABPoly
from .ring import FieldElement, FieldSpec, find_irreducible, is_prime, primes_between

__all__ = [
    "ell_p",
    "c_p_direct",
    "c_p_sum",
    "deuring_index_set",
    "is_supersingular_divpoly",
    "is_supersingular_deuring",
    "CriteriaReport",
    "check_curve",
    "SweepSummary",
    "SweepResult",
    "verify_theorem_sweep",
    "MAX_SWEEP_FIELD",
]

#: Largest field size a sweep will enumerate (pairs (A, B) grow as its square).
MAX_SWEEP_FIELD = 10**4


def _check_prime(p: int) -> None:
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def _symbolic_modulus(ring) -> int | None:
    if ring is None:
        return None
    return getattr(ring, "modulus", None) if not isinstance(ring, int) else ring


def ell_p(A, B, p: int, ring=None):
    """Coefficient of x^{p(p-1)/2} in the p-th division polynomial.

    With field elements ``A``, ``B`` the recursion runs over that field.  With
    ``A = B = None`` the result is an :class:`ABPoly`, exact over Z unless
    ``ring`` gives a modulus.
    """
    _check_prime(p)
    top = p * (p - 1) // 2
    if A is None and B is None:
        table = symbolic_table(p, ring, targets=(p,))
        return table[p].coeff(top)
    table = build_table(A, B, p, ring, targets=(p,))
    return table[p].coeff(top)


def _cubic(ring, A, B) -> Poly:
    return Poly.from_coeffs(ring, [B, A, 0, 1])


def c_p_direct(A, B, p: int, ring=None):
    """Coefficient of x^{p-1} in (x^3 + Ax + B)^{(p-1)/2}, by expanding the power."""
    _check_prime(p)
    q = (p - 1) // 2
    if A is None and B is None:
        modulus = _symbolic_modulus(ring)
        cubic = XABPoly.x(modulus) ** 3 + XABPoly.A(modulus) * XABPoly.x(modulus) + XABPoly.B(modulus)
        return (cubic**q).coeff(p - 1)
    if ring is None:
        ring = A.spec
    return (_cubic(ring, A, B) ** q).coeff(p - 1)


def deuring_index_set(p: int) -> list[int]:
    """J = { j : j = -q mod 3, 0 <= j <= q/2 } with q = (p-1)/2."""
    q = (p - 1) // 2
    return [j for j in range(0, q // 2 + 1) if (j + q) % 3 == 0]


def c_p_sum(A, B, p: int, ring=None):
    """c_p as the trinomial sum over J of multinomial(q; (2q-j)/3, j, (q-2j)/3) A^j B^{(q-2j)/3}."""
    _check_prime(p)
    q = (p - 1) // 2
    terms = {}
    for j in deuring_index_set(p):
        i, k = (2 * q - j) // 3, (q - 2 * j) // 3
        coeff = math.factorial(q) // (math.factorial(i) * math.factorial(j) * math.factorial(k))
        terms[(j, k)] = coeff
    if A is None and B is None:
        return ABPoly(terms, _symbolic_modulus(ring))
    total = A * 0
    for (j, k), c in terms.items():
        total = total + c * A**j * B**k
    return total


def is_supersingular_divpoly(E: CurveParams) -> bool:
    return ell_p(E.A, E.B, E.p).is_zero()


def is_supersingular_deuring(E: CurveParams) -> bool:
    return c_p_direct(E.A, E.B, E.p).is_zero()


def _encode(e: FieldElement) -> int | list[int]:
    return e.coeffs[0] if e.spec.k == 1 else list(e.coeffs)


@dataclass
class CriteriaReport:
    p: int
    field: FieldSpec
    A: FieldElement
    B: FieldElement
    ell_p: FieldElement
    c_p: FieldElement
    ss_divpoly: bool
    ss_deuring: bool
    ss_oracle: bool
    structure: StructureReport | None = None
    structure_ok: bool | None = None

    @property
    def theorem_holds(self) -> bool:
        return self.ell_p == self.c_p

    @property
    def criteria_agree(self) -> bool:
        return self.ss_divpoly == self.ss_deuring == self.ss_oracle

    @property
    def ok(self) -> bool:
        return self.theorem_holds and self.criteria_agree and self.structure_ok is not False

    def to_dict(self) -> dict:
        out = {
            "p": self.p,
            "k": self.field.k,
            "A": _encode(self.A),
            "B": _encode(self.B),
            "ell_p": _encode(self.ell_p),
            "c_p": _encode(self.c_p),
            "ss_divpoly": self.ss_divpoly,
            "ss_deuring": self.ss_deuring,
            "ss_oracle": self.ss_oracle,
            "theorem_holds": self.theorem_holds,
        }
        if self.structure is not None:
            deg = self.structure.degree
            out["f_p_degree"] = None if deg == -math.inf else int(deg)
            out["f_p_in_x_p"] = self.structure.all_exponents_multiple_of_p
            out["structure_ok"] = self.structure_ok
        return out


def check_curve(E: CurveParams, structure: bool = True) -> CriteriaReport:
    """Evaluate all three supersingularity verdicts for one curve."""
    p = E.p
    table = curve_table(E, p, targets=(p,))
    f_p = table[p]
    ell = f_p.coeff(p * (p - 1) // 2)
    c = c_p_direct(E.A, E.B, p)
    report = CriteriaReport(
        p=p,
        field=E.field,
        A=E.A,
        B=E.B,
        ell_p=ell,
        c_p=c,
        ss_divpoly=ell.is_zero(),
        ss_deuring=c.is_zero(),
        ss_oracle=is_supersingular_by_trace(E),
    )
    if structure:
        s = xp_structure_report(f_p, p)
        report.structure = s
        report.structure_ok = s.consistent_with(report.ss_oracle, p)
    return report


@dataclass
class SweepSummary:
    checked: int = 0
    skipped_singular: int = 0
    theorem_failures: int = 0
    criteria_disagreements: int = 0
    structure_failures: int = 0
    supersingular_count: int = 0
    per_field: dict = field(default_factory=dict)

    @property
    def failures(self) -> int:
        return self.theorem_failures + self.criteria_disagreements + self.structure_failures

    def add(self, report: CriteriaReport) -> None:
        self.checked += 1
        self.theorem_failures += not report.theorem_holds
        self.criteria_disagreements += not report.criteria_agree
        self.structure_failures += report.structure_ok is False
        self.supersingular_count += report.ss_oracle
        key = f"{report.p}^{report.field.k}"
        entry = self.per_field.setdefault(key, {"checked": 0, "supersingular": 0})
        entry["checked"] += 1
        entry["supersingular"] += report.ss_oracle

    def to_dict(self) -> dict:
        return {
            "checked": self.checked,
            "failures": self.failures,
            "supersingular_count": self.supersingular_count,
            "skipped_singular": self.skipped_singular,
            "theorem_failures": self.theorem_failures,
            "criteria_disagreements": self.criteria_disagreements,
            "structure_failures": self.structure_failures,
            "per_field": self.per_field,
        }


@dataclass
class SweepResult:
    reports: list[CriteriaReport]
    summary: SweepSummary


def _sweep_row(args) -> tuple[list[CriteriaReport], int]:
    """All curves with a fixed A (the outer loop); returns reports and singular count."""
    spec, a_idx, structure = args
    A = spec.from_index(a_idx)
    reports = []
    singular = 0
    for B in spec.elements():
        if not is_nonsingular(A, B):
            singular += 1
            continue
        reports.append(check_curve(CurveParams(spec, A, B), structure=structure))
    return reports, singular


def default_jobs() -> int:
    env = os.environ.get("DIVPOLY_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def sweep_fields(p_max: int, k_max: int, p_min: int = 5, k_limit: dict | None = None):
    """Fields F_{p^k} visited by a sweep, in (p, k) order."""
    out = []
    for p in primes_between(p_min, p_max):
        for k in range(1, k_max + 1):
            if k_limit is not None and p > k_limit.get(k, p_max):
                continue
            spec = find_irreducible(p, k)
            if spec.order > MAX_SWEEP_FIELD:
                raise FieldTooLarge(f"F_{spec.order} exceeds the sweep limit {MAX_SWEEP_FIELD}")
            out.append(spec)
    return out


def verify_theorem_sweep(
    p_max: int,
    k_max: int = 1,
    *,
    p_min: int = 5,
    jobs: int | None = 1,
    structure: bool = True,
    k_limit: dict | None = None,
    keep_reports: bool = True,
) -> SweepResult:
    """Check ell_p = c_p and the three verdicts on every nonsingular (A, B).

    Iteration is A outer, B inner, in element-index order, for every prime
    ``p_min <= p <= p_max`` and every ``k <= k_max`` (``k_limit`` maps a
    degree k to the largest p swept at that degree).  Reports are merged in
    iteration order regardless of ``jobs``.
    """
    fields = sweep_fields(p_max, k_max, p_min, k_limit)
    tasks = [(spec, a, structure) for spec in fields for a in range(spec.order)]
    jobs = default_jobs() if jobs is None else jobs
    summary = SweepSummary()
    reports: list[CriteriaReport] = []
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = pool.map(_sweep_row, tasks, chunksize=max(1, len(tasks) // (8 * jobs)))
            for row, singular in results:
                _merge(row, singular, summary, reports, keep_reports)
    else:
        for task in tasks:
            row, singular = _sweep_row(task)
            _merge(row, singular, summary, reports, keep_reports)
    return SweepResult(reports, summary)


def _merge(row, singular, summary, reports, keep) -> None:
    summary.skipped_singular += singular
    for r in row:
        summary.add(r)
        if keep or not r.ok:
            reports.append(r)
