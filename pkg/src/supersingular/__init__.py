"""Division polynomials, supersingularity criteria and the ell_p = c_p identity."""

__version__ = "0.1.0"

from .alphas import (
    AlphaTable,
    alpha_closed,
    alpha_closed_boundary,
    alpha_recurrence,
    ell_from_alphas,
    multinomial_mod,
    special_curve_check,
    step3_congruence_check,
)
from .criteria import (
    CriteriaReport,
    c_p_direct,
    c_p_sum,
    check_curve,
    ell_p,
    is_supersingular_deuring,
    is_supersingular_divpoly,
    verify_theorem_sweep,
)
from .curve import (
    INFINITY,
    AffinePoint,
    CurveParams,
    add_points,
    count_points,
    is_nonsingular,
    is_supersingular_by_trace,
    scalar_mul,
)
from .divpoly import (
    DivPolyTable,
    build_table,
    eval_psi_at_point,
    phi,
    symbolic_table,
    x_mul_m_identity_check,
    xp_structure_report,
)
from .poly import ABPoly, Poly, XABPoly, coeff_at, exact_div_const, poly_mul, poly_pow, render
from .ring import ZZ, FieldElement, FieldSpec, ModInt, ResidueRing, find_irreducible, inv, pow_mod

__all__ = [
    "__version__",
    "AlphaTable",
    "alpha_closed",
    "alpha_closed_boundary",
    "alpha_recurrence",
    "ell_from_alphas",
    "multinomial_mod",
    "special_curve_check",
    "step3_congruence_check",
    "CriteriaReport",
    "c_p_direct",
    "c_p_sum",
    "check_curve",
    "ell_p",
    "is_supersingular_deuring",
    "is_supersingular_divpoly",
    "verify_theorem_sweep",
    "INFINITY",
    "AffinePoint",
    "CurveParams",
    "add_points",
    "count_points",
    "is_nonsingular",
    "is_supersingular_by_trace",
    "scalar_mul",
    "DivPolyTable",
    "build_table",
    "eval_psi_at_point",
    "phi",
    "symbolic_table",
    "x_mul_m_identity_check",
    "xp_structure_report",
    "ABPoly",
    "Poly",
    "XABPoly",
    "coeff_at",
    "exact_div_const",
    "poly_mul",
    "poly_pow",
    "render",
    "ZZ",
    "FieldElement",
    "FieldSpec",
    "ModInt",
    "ResidueRing",
    "find_irreducible",
    "inv",
    "pow_mod",
]
