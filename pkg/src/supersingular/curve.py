"""Short Weierstrass curves y^2 = x^3 + Ax + B over F_{p^k}.

Affine chord-tangent group law with an explicit point at infinity, naive
point counting and a supersingularity oracle based on the trace of
Frobenius.  The oracle deliberately uses none of the coefficient criteria.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, Union

import numpy as np

from .ring import FieldElement, FieldSpec

__all__ = [
    "SingularCurve",
    "FieldTooLarge",
    "CurveParams",
    "Infinity",
    "INFINITY",
    "AffinePoint",
    "Point",
    "is_nonsingular",
    "is_on_curve",
    "negate",
    "add_points",
    "scalar_mul",
    "points",
    "quadratic_character_table",
    "count_points",
    "trace_of_frobenius",
    "is_supersingular_by_trace",
    "j_invariant",
    "base_change",
    "MAX_COUNT_FIELD",
]

#: Largest field size accepted by :func:`count_points`.
MAX_COUNT_FIELD = 10**6


class SingularCurve(ValueError):
    pass


class FieldTooLarge(ValueError):
    pass


def is_nonsingular(A: FieldElement, B: FieldElement) -> bool:
    """True iff 4A^3 + 27B^2 != 0, i.e. x^3 + Ax + B has distinct roots."""
    return not (4 * A**3 + 27 * B**2).is_zero()


@dataclass(frozen=True)
class CurveParams:
    field: FieldSpec
    A: FieldElement
    B: FieldElement

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", self.field(self.A))
        object.__setattr__(self, "B", self.field(self.B))
        if not is_nonsingular(self.A, self.B):
            raise SingularCurve(f"4A^3 + 27B^2 = 0 for A={self.A}, B={self.B}")

    @property
    def p(self) -> int:
        return self.field.p

    def rhs(self, x: FieldElement) -> FieldElement:
        return x**3 + self.A * x + self.B

    def __str__(self) -> str:
        return f"y^2 = x^3 + ({self.A})x + ({self.B}) over {self.field!r}"


class Infinity:
    """The neutral element O."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()


@dataclass(frozen=True)
class AffinePoint:
    x: FieldElement
    y: FieldElement


Point = Union[AffinePoint, Infinity]


def is_on_curve(P: Point, E: CurveParams) -> bool:
    if P is INFINITY:
        return True
    return P.y * P.y == E.rhs(P.x)


def negate(P: Point) -> Point:
    if P is INFINITY:
        return P
    return AffinePoint(P.x, -P.y)


def add_points(P: Point, Q: Point, E: CurveParams) -> Point:
    if P is INFINITY:
        return Q
    if Q is INFINITY:
        return P
    if P.x == Q.x:
        if (P.y + Q.y).is_zero():
            return INFINITY
        # doubling; y != 0 here
        lam = (3 * P.x * P.x + E.A) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return AffinePoint(x3, y3)


def scalar_mul(m: int, P: Point, E: CurveParams) -> Point:
    """[m]P by double-and-add; negative m goes through negation."""
    if m < 0:
        return scalar_mul(-m, negate(P), E)
    result: Point = INFINITY
    addend = P
    while m:
        if m & 1:
            result = add_points(result, addend, E)
        m >>= 1
        if m:
            addend = add_points(addend, addend, E)
    return result


def points(E: CurveParams) -> Iterator[Point]:
    """Every point of E(F_{p^k}), O first, then affine points by x-index."""
    spec = E.field
    if spec.order > MAX_COUNT_FIELD:
        raise FieldTooLarge(f"F_{spec.order} too large to enumerate")
    yield INFINITY
    roots = _square_roots(spec)
    for x in spec.elements():
        for y in roots.get(E.rhs(x).index, ()):
            yield AffinePoint(x, spec.from_index(y))


@functools.lru_cache(maxsize=32)
def _square_roots(spec: FieldSpec) -> dict[int, tuple[int, ...]]:
    elems = spec.element_array()
    sq = spec.index_of(spec.mul_arrays(elems, elems))
    roots: dict[int, list[int]] = {}
    for y, s in enumerate(sq.tolist()):
        roots.setdefault(s, []).append(y)
    return {s: tuple(ys) for s, ys in roots.items()}


@functools.lru_cache(maxsize=32)
def quadratic_character_table(spec: FieldSpec) -> np.ndarray:
    """chi(z) for every element index z, as z^((q-1)/2) mapped to {-1, 0, 1}."""
    elems = spec.element_array()
    e = (spec.order - 1) // 2
    result = np.zeros_like(elems)
    result[:, 0] = 1
    base = elems.copy()
    while e:
        if e & 1:
            result = spec.mul_arrays(result, base)
        e >>= 1
        if e:
            base = spec.mul_arrays(base, base)
    chi = np.zeros(spec.order, dtype=np.int64)
    one = spec.index_of(np.array([[1] + [0] * (spec.k - 1)]))[0]
    idx = spec.index_of(result)
    chi[idx == one] = 1
    chi[(idx != one) & (idx != 0)] = -1
    chi[0] = 0
    chi.setflags(write=False)
    return chi


@functools.lru_cache(maxsize=32)
def _cubes_plus(spec: FieldSpec) -> tuple[np.ndarray, np.ndarray]:
    elems = spec.element_array()
    cubes = spec.mul_arrays(spec.mul_arrays(elems, elems), elems)
    cubes.setflags(write=False)
    return elems, cubes


def count_points(E: CurveParams) -> int:
    """#E(F_{p^k}) = 1 + sum over x of (1 + chi(x^3 + Ax + B)), chi(0) = 0."""
    spec = E.field
    if spec.order > MAX_COUNT_FIELD:
        raise FieldTooLarge(f"F_{spec.order} exceeds the enumeration limit {MAX_COUNT_FIELD}")
    elems, cubes = _cubes_plus(spec)
    A = np.array(E.A.coeffs, dtype=np.int64)
    B = np.array(E.B.coeffs, dtype=np.int64)
    vals = (cubes + spec.mul_arrays(elems, A[None, :]) + B[None, :]) % spec.p
    chi = quadratic_character_table(spec)
    n = 1 + spec.order + int(chi[spec.index_of(vals)].sum())
    q = spec.order
    assert (q + 1 - n) ** 2 <= 4 * q, f"Hasse bound violated: N={n}, q={q}"
    return n


def trace_of_frobenius(E: CurveParams) -> int:
    return E.field.order + 1 - count_points(E)


def is_supersingular_by_trace(E: CurveParams) -> bool:
    """Supersingular iff p divides the trace of Frobenius."""
    return trace_of_frobenius(E) % E.p == 0


def j_invariant(E: CurveParams) -> FieldElement:
    num = 4 * E.A**3
    return 1728 * num / (num + 27 * E.B**2)


def base_change(E: CurveParams, field: FieldSpec) -> CurveParams:
    """The same curve over an extension of its prime field (A, B must lie in F_p)."""
    if field.p != E.p:
        raise ValueError("characteristic mismatch")
    return CurveParams(field, field(int(E.A)), field(int(E.B)))

