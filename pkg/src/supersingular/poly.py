"""Dense univariate polynomials and sparse polynomials in the curve symbols A, B.

Two families live here:

* :class:`Poly` -- a dense polynomial in x whose coefficients come from one of
  the coefficient rings of :mod:`supersingular.ring` (``ZZ``, ``Z/m``,
  ``F_{p^k}``).  Coefficients are a numpy array, lowest exponent first,
  trailing zeros stripped.
* :class:`ABPoly` / :class:`XABPoly` -- sparse polynomials in (A, B) and in
  (x, A, B) with integer coefficients, either exact or reduced modulo a
  runtime modulus.  These carry the symbolic division polynomials.

Weighted degrees use doubled integer weights: x -> 2, A -> 4, B -> 6 (and
y -> 3), so that every grading is integral.

Textual rendering (used by the CLI and by fixtures) orders x-exponents
descending; a coefficient with several (A, B)-terms is parenthesised and its
terms are ordered by increasing A-exponent, e.g.
``2*A*x^10 + 4*A^2*B*x^5 + (4*B^4 + 3*A^3*B^2 + A^6)``.  Residues are printed
as their least non-negative representative; exact integers keep their sign.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Iterable, Mapping

import numpy as np

from .ring import (
    DivisionByZero,
    FieldSpec,
    InexactDivision,
    IntegerRing,
    ModInt,
    NotInvertible,
    ResidueRing,
)

__all__ = [
    "ZERO_DEGREE",
    "Poly",
    "ABPoly",
    "XABPoly",
    "poly_mul",
    "poly_pow",
    "coeff_at",
    "exact_div_const",
    "weighted_degree",
    "is_weighted_homogeneous",
    "render",
]

Ring = IntegerRing | ResidueRing | FieldSpec

#: Degree of the zero polynomial.  Behaves correctly under ``deg(a) + deg(b)``.
ZERO_DEGREE = -math.inf

WEIGHT_X, WEIGHT_A, WEIGHT_B = 2, 4, 6


def _strip(arr: np.ndarray) -> np.ndarray:
    n = len(arr)
    if arr.ndim == 1:
        while n and not arr[n - 1]:
            n -= 1
    else:
        while n and not arr[n - 1].any():
            n -= 1
    return arr if n == len(arr) else arr[:n]


class Poly:
    """Dense polynomial in x over a coefficient ring.  Immutable by convention."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs: np.ndarray | Iterable):
        arr = np.asarray(coeffs)
        if arr.dtype != ring.dtype and ring.dtype is not object:
            arr = arr.astype(ring.dtype)
        elif ring.dtype is object and arr.dtype != object:
            arr = arr.astype(object)
        arr = ring.reduce(arr.reshape(-1, *ring.elem_shape))
        self.ring = ring
        self.coeffs = _strip(arr)

    @classmethod
    def _wrap(cls, ring: Ring, arr: np.ndarray) -> Poly:
        """Trusted constructor: ``arr`` is already reduced with the ring's dtype."""
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.coeffs = _strip(arr)
        return obj

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, ring: Ring, coeffs: Iterable) -> Poly:
        """Build from ring elements (or ints), lowest exponent first."""
        rows = [ring.to_row(c) for c in coeffs]
        if not rows:
            return cls.zero(ring)
        return cls(ring, np.array(rows, dtype=ring.dtype))

    @classmethod
    def zero(cls, ring: Ring) -> Poly:
        return cls(ring, np.zeros((0, *ring.elem_shape), dtype=ring.dtype))

    @classmethod
    def constant(cls, ring: Ring, c) -> Poly:
        return cls.from_coeffs(ring, [c])

    @classmethod
    def x(cls, ring: Ring) -> Poly:
        return cls.from_coeffs(ring, [0, 1])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if len(self.coeffs) else ZERO_DEGREE

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def coeff(self, t: int):
        if 0 <= t < len(self.coeffs):
            return self.ring.element(self.coeffs[t])
        return self.ring.zero()

    def leading_coeff(self):
        return self.coeff(len(self.coeffs) - 1) if len(self.coeffs) else self.coeff(0)

    def exponents(self) -> list[int]:
        """Exponents carrying a nonzero coefficient."""
        if self.coeffs.ndim == 1:
            return [int(i) for i in np.flatnonzero(self.coeffs)]
        return [int(i) for i in np.flatnonzero(self.coeffs.any(axis=1))]

    def __len__(self) -> int:
        return len(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        return Poly.constant(self.ring, other)

    def _combine(self, other: Poly, sign: int) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) >= len(b):
            out = a.copy()
            if sign > 0:
                out[: len(b)] += b
            else:
                out[: len(b)] -= b
        else:
            out = b.copy() if sign > 0 else -b
            out[: len(a)] += a
        return Poly._wrap(self.ring, self.ring.reduce(out))

    def __add__(self, other) -> Poly:
        return self._combine(self._coerce(other), 1)

    __radd__ = __add__

    def __sub__(self, other) -> Poly:
        return self._combine(self._coerce(other), -1)

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __neg__(self) -> Poly:
        return Poly._wrap(self.ring, self.ring.reduce(-self.coeffs))

    def __mul__(self, other) -> Poly:
        if isinstance(other, (int, np.integer)):
            c = int(other)
            if self.ring.characteristic:
                c %= self.ring.characteristic
            return Poly._wrap(self.ring, self.ring.reduce(self.coeffs * c))
        o = self._coerce(other)
        return poly_mul(self, o)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly:
        return poly_pow(self, e)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return (
                self.ring == other.ring
                and self.coeffs.shape == other.coeffs.shape
                and bool(np.all(self.coeffs == other.coeffs))
            )
        if isinstance(other, (int, ModInt)) or hasattr(other, "spec"):
            return self == Poly.constant(self.ring, other)
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def exact_div_const(self, c) -> Poly:
        return exact_div_const(self, c)

    def evaluate(self, x):
        """Horner evaluation at a ring element."""
        if self.is_zero():
            return self.ring.zero()
        acc = self.coeff(len(self.coeffs) - 1)
        for t in range(len(self.coeffs) - 2, -1, -1):
            acc = acc * x + self.coeff(t)
        return acc

    # -- division over fields ----------------------------------------------

    def divmod(self, other: Poly) -> tuple[Poly, Poly]:
        """Euclidean division; the divisor's leading coefficient must be a unit."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        ring = self.ring
        lc_inv = ring.inverse_row(other.coeffs[-1])
        rem = [ring.element(r) for r in self.coeffs]
        div = [ring.element(r) for r in other.coeffs]
        lc_inv_e = ring.element(lc_inv)
        dq = len(rem) - len(div)
        if dq < 0:
            return Poly.zero(ring), self
        quot = [None] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + len(div) - 1] * lc_inv_e
            quot[i] = c
            if c:
                for j, d in enumerate(div):
                    rem[i + j] = rem[i + j] - c * d
        return Poly.from_coeffs(ring, quot), Poly.from_coeffs(ring, rem[: len(div) - 1])

    def __floordiv__(self, other: Poly) -> Poly:
        return self.divmod(other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return self.divmod(other)[1]

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self.exact_div_const(self.leading_coeff())

    def gcd(self, other: Poly) -> Poly:
        """Monic gcd over a field."""
        if not self.ring.is_field():
            raise NotInvertible(f"gcd requires a field, got {self.ring!r}")
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def __repr__(self) -> str:
        return f"Poly({render(self)}, {self.ring!r})"

    def __str__(self) -> str:
        return render(self)


def poly_mul(a, b):
    """Product of two polynomials of the same kind over the same coefficient ring."""
    if not isinstance(a, Poly):
        return a * b
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring!r} vs {b.ring!r}")
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.ring)
    return Poly._wrap(a.ring, a.ring.convolve(a.coeffs, b.coeffs))


def _generic_pow(a, e: int, one):
    if e < 0:
        raise ValueError("exponent must be non-negative")
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else result * base
        e >>= 1
        if e:
            base = base * base
    return one if result is None else result


def poly_pow(a, e: int):
    """Square-and-multiply power for :class:`Poly`, :class:`ABPoly` or :class:`XABPoly`."""
    if isinstance(a, Poly):
        one = Poly.constant(a.ring, 1)
    else:
        one = type(a).constant(1, a.modulus)
    return _generic_pow(a, e, one)


def exact_div_const(a, c):
    """Divide every coefficient by ``c``.

    Over Z divisibility is checked coefficientwise (:class:`InexactDivision`);
    over Z/m and fields ``c`` is inverted.
    """
    if isinstance(a, Poly):
        if a.is_zero():
            return a
        if isinstance(a.ring, IntegerRing):
            return Poly(a.ring, a.ring.exact_quotient(a.coeffs, int(c)))
        return Poly(a.ring, a.ring.exact_quotient(a.coeffs, c))
    return a.exact_div_const(c)


# --------------------------------------------------------------------------
# Sparse (A, B) and (x, A, B) polynomials
# --------------------------------------------------------------------------


def _mod_div(c: int, d: int, modulus: int | None) -> int:
    if modulus is None:
        q, r = divmod(c, d)
        if r:
            raise InexactDivision(f"coefficient {c} not divisible by {d}")
        return q
    try:
        return c * pow(d, -1, modulus) % modulus
    except ValueError:
        raise NotInvertible(f"{d} is not invertible modulo {modulus}") from None


class _Sparse:
    """Shared machinery: a dict from exponent tuples to nonzero int coefficients."""

    __slots__ = ("terms", "modulus")
    nvars = 0

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None,
                 modulus: int | None = None):
        self.modulus = modulus
        clean = {}
        if terms:
            for key, c in terms.items():
                c = int(c)
                if modulus is not None:
                    c %= modulus
                if c:
                    clean[tuple(key)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict, modulus: int | None):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.modulus = modulus
        return obj

    @classmethod
    def constant(cls, c: int, modulus: int | None = None):
        return cls({(0,) * cls.nvars: c}, modulus)

    def _check(self, other) -> None:
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.modulus != self.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def _lift(self, other):
        if isinstance(other, (int, np.integer)):
            return type(self).constant(int(other), self.modulus)
        if isinstance(other, ModInt):
            if self.modulus is None or self.modulus % other.modulus:
                raise ValueError("residue modulus incompatible with polynomial")
            return type(self).constant(other.residue, self.modulus)
        self._check(other)
        return other

    def _combine(self, other, sign: int):
        other = self._lift(other)
        m = self.modulus
        out = dict(self.terms)
        for key, c in other.terms.items():
            v = out.get(key, 0) + sign * c
            if m is not None:
                v %= m
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return self._raw(out, m)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return self._lift(other)._combine(self, -1)

    def __neg__(self):
        m = self.modulus
        if m is None:
            return self._raw({k: -c for k, c in self.terms.items()}, m)
        return self._raw({k: (-c) % m for k, c in self.terms.items()}, m)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return type(self)({k: c * int(other) for k, c in self.terms.items()}, self.modulus)
        other = self._lift(other)
        m = self.modulus
        acc: dict = defaultdict(int)
        n = self.nvars
        if len(self.terms) < len(other.terms):
            small, big = self.terms, other.terms
        else:
            small, big = other.terms, self.terms
        for k1, c1 in small.items():
            for k2, c2 in big.items():
                if n == 2:
                    key = (k1[0] + k2[0], k1[1] + k2[1])
                else:
                    key = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])
                acc[key] += c1 * c2
        if m is None:
            out = {k: v for k, v in acc.items() if v}
        else:
            out = {}
            for k, v in acc.items():
                v %= m
                if v:
                    out[k] = v
        return self._raw(out, m)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return poly_pow(self, e)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, np.integer)):
            other = type(self).constant(int(other), self.modulus)
        if type(other) is not type(self):
            return NotImplemented
        return self.modulus == other.modulus and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.terms

    def exact_div_const(self, c: int):
        c = int(c)
        if c == 0:
            raise DivisionByZero("division by zero")
        return type(self)(
            {k: _mod_div(v, c, self.modulus) for k, v in self.terms.items()}, self.modulus
        )

    def reduce(self, modulus: int):
        """Image in coefficients mod ``modulus`` (must divide the current modulus)."""
        if self.modulus is not None and self.modulus % modulus:
            raise ValueError(f"cannot reduce mod {modulus} from mod {self.modulus}")
        return type(self)(self.terms, modulus)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        ring = "ZZ" if self.modulus is None else f"Z/{self.modulus}"
        return f"{type(self).__name__}({render(self)}, {ring})"

    def __str__(self) -> str:
        return render(self)


class ABPoly(_Sparse):
    """Polynomial in A, B; ``terms`` maps (r, s) to the coefficient of A^r B^s."""

    __slots__ = ()
    nvars = 2

    @classmethod
    def A(cls, modulus: int | None = None) -> ABPoly:
        return cls({(1, 0): 1}, modulus)

    @classmethod
    def B(cls, modulus: int | None = None) -> ABPoly:
        return cls({(0, 1): 1}, modulus)

    def coeff(self, r: int, s: int) -> int:
        return self.terms.get((r, s), 0)

    def weighted_degree(self) -> int | float:
        if not self.terms:
            return ZERO_DEGREE
        return max(WEIGHT_A * r + WEIGHT_B * s for r, s in self.terms)

    def evaluate(self, A, B):
        """Substitute ring elements for A and B."""
        one = A ** 0
        acc = one * 0
        for (r, s), c in self.terms.items():
            acc = acc + (A ** r) * (B ** s) * c
        return acc


class XABPoly(_Sparse):
    """Polynomial in x, A, B; ``terms`` maps (t, r, s) to the coefficient of x^t A^r B^s."""

    __slots__ = ()
    nvars = 3

    @classmethod
    def x(cls, modulus: int | None = None) -> XABPoly:
        return cls({(1, 0, 0): 1}, modulus)

    @classmethod
    def A(cls, modulus: int | None = None) -> XABPoly:
        return cls({(0, 1, 0): 1}, modulus)

    @classmethod
    def B(cls, modulus: int | None = None) -> XABPoly:
        return cls({(0, 0, 1): 1}, modulus)

    @property
    def degree(self) -> int | float:
        """Degree in x."""
        return max((t for t, _, _ in self.terms), default=ZERO_DEGREE)

    def x_exponents(self) -> list[int]:
        return sorted({t for t, _, _ in self.terms})

    def coeff(self, t: int) -> ABPoly:
        return ABPoly._raw(
            {(r, s): c for (tt, r, s), c in self.terms.items() if tt == t}, self.modulus
        )

    def by_x(self) -> dict[int, ABPoly]:
        groups: dict[int, dict] = defaultdict(dict)
        for (t, r, s), c in self.terms.items():
            groups[t][(r, s)] = c
        return {t: ABPoly._raw(g, self.modulus) for t, g in sorted(groups.items())}

    def weighted_degree(self) -> int | float:
        if not self.terms:
            return ZERO_DEGREE
        return max(WEIGHT_X * t + WEIGHT_A * r + WEIGHT_B * s for t, r, s in self.terms)

    def weights(self) -> set[int]:
        return {WEIGHT_X * t + WEIGHT_A * r + WEIGHT_B * s for t, r, s in self.terms}

    def specialize(self, ring, A, B) -> Poly:
        """Substitute ring elements for A and B, giving a dense :class:`Poly` over ``ring``."""
        coeffs = [ring.zero()] * (int(max(self.degree, -1)) + 1)
        for t, ab in self.by_x().items():
            coeffs[t] = coeffs[t] + ab.evaluate(A, B)
        return Poly.from_coeffs(ring, coeffs)


def coeff_at(a, t: int):
    """Coefficient of x^t: a ring element for :class:`Poly`, an :class:`ABPoly` for :class:`XABPoly`."""
    return a.coeff(t)


def weighted_degree(a) -> int | float:
    return a.weighted_degree()


def is_weighted_homogeneous(a, d: int) -> bool:
    """True when every term has doubled weight exactly ``d`` (the zero polynomial qualifies)."""
    return a.weights() <= {d}


# --------------------------------------------------------------------------
# Rendering
# --------------------------------------------------------------------------


def _monomial(parts: list[tuple[str, int]]) -> str:
    out = []
    for name, e in parts:
        if e == 1:
            out.append(name)
        elif e > 1:
            out.append(f"{name}^{e}")
    return "*".join(out)


def _join_signed(items: list[tuple[int, str]]) -> str:
    """items: (sign, body) with body unsigned; join as 'a + b - c'."""
    text = ""
    for i, (sign, body) in enumerate(items):
        if i == 0:
            text = ("-" if sign < 0 else "") + body
        else:
            text += (" - " if sign < 0 else " + ") + body
    return text


def _scaled(c: int, mono: str) -> tuple[int, str]:
    sign = -1 if c < 0 else 1
    c = abs(c)
    if not mono:
        return sign, str(c)
    if c == 1:
        return sign, mono
    return sign, f"{c}*{mono}"


def _render_ab(ab: ABPoly) -> list[tuple[int, str]]:
    items = []
    for (r, s) in sorted(ab.terms):
        items.append(_scaled(ab.terms[(r, s)], _monomial([("A", r), ("B", s)])))
    return items


def render(a) -> str:
    """Stable textual form of a :class:`Poly`, :class:`ABPoly` or :class:`XABPoly`."""
    if isinstance(a, ABPoly):
        items = _render_ab(a)
        return _join_signed(items) if items else "0"
    if isinstance(a, XABPoly):
        items = []
        for t, ab in sorted(a.by_x().items(), reverse=True):
            xm = _monomial([("x", t)])
            inner = _render_ab(ab)
            if len(inner) == 1:
                sign, body = inner[0]
                if xm:
                    body = xm if body == "1" else f"{body}*{xm}"
                items.append((sign, body))
            else:
                body = f"({_join_signed(inner)})"
                items.append((1, f"{body}*{xm}" if xm else body))
        return _join_signed(items) if items else "0"
    if isinstance(a, Poly):
        items = []
        for t in range(len(a.coeffs) - 1, -1, -1):
            row = a.coeffs[t]
            xm = _monomial([("x", t)])
            if isinstance(a.ring, FieldSpec):
                if not np.any(row):
                    continue
                el = a.ring.element(row)
                if a.ring.k == 1 or not any(el.coeffs[1:]):
                    items.append(_scaled(el.coeffs[0], xm))
                else:
                    s = str(el)
                    items.append((1, f"{s}*{xm}" if xm else s))
            else:
                c = int(row)
                if c:
                    items.append(_scaled(c, xm))
        return _join_signed(items) if items else "0"
    raise TypeError(f"cannot render {type(a).__name__}")
