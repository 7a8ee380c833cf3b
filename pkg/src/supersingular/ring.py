"""Exact residue arithmetic: Z/m, and small extension fields F_{p^k}.

Residues carry their modulus at runtime.  ``Z/p^2`` stands in for the
p-local integers modulo ``p^2``; any attempt to invert a multiple of ``p``
raises :class:`NotInvertible` instead of silently leaving that ring.

Besides scalar element types this module provides the three *coefficient
rings* consumed by the dense polynomial kernels in :mod:`supersingular.poly`:
:data:`ZZ`, :class:`ResidueRing` and :class:`FieldSpec`.  Coefficients of a
dense polynomial live in a numpy array whose first axis is the x-exponent;
the ring decides dtype, trailing shape and how products are reduced.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "NotInvertible",
    "DivisionByZero",
    "InexactDivision",
    "ModInt",
    "inv",
    "pow_mod",
    "is_prime",
    "primes_between",
    "IntegerRing",
    "ZZ",
    "ResidueRing",
    "FieldSpec",
    "FieldElement",
    "find_irreducible",
]

_INT64_LIMIT = 2**63 - 1


class NotInvertible(ArithmeticError):
    """Raised when inverting a residue that shares a factor with the modulus."""


class DivisionByZero(ZeroDivisionError):
    """Raised when inverting zero in a field."""


class InexactDivision(ArithmeticError):
    """Raised when an exact division over Z leaves a remainder."""


def is_prime(n: int) -> bool:
    """Deterministic trial division; intended for desk-scale n."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


# --------------------------------------------------------------------------
# Z/m
# --------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ModInt:
    """A residue class modulo a runtime modulus."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            object.__setattr__(self, "residue", self.residue % self.modulus)

    def _coerce(self, other: ModInt | int) -> int:
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}"
                )
            return other.residue
        if isinstance(other, (int, np.integer)):
            return int(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: ModInt | int) -> ModInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModInt(self.residue + o, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: ModInt | int) -> ModInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModInt(self.residue - o, self.modulus)

    def __rsub__(self, other: int) -> ModInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModInt(o - self.residue, self.modulus)

    def __mul__(self, other: ModInt | int) -> ModInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return ModInt(self.residue * o, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> ModInt:
        return ModInt(-self.residue, self.modulus)

    def __truediv__(self, other: ModInt | int) -> ModInt:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * inv(ModInt(o, self.modulus))

    def __pow__(self, e: int) -> ModInt:
        if e < 0:
            return pow_mod(inv(self), -e)
        return pow_mod(self, e)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ModInt):
            return self.modulus == other.modulus and self.residue == other.residue
        if isinstance(other, (int, np.integer)):
            return self.residue == int(other) % self.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.residue, self.modulus))

    def __int__(self) -> int:
        return self.residue

    def __bool__(self) -> bool:
        return self.residue != 0

    def __repr__(self) -> str:
        return f"ModInt({self.residue}, {self.modulus})"

    def __str__(self) -> str:
        return str(self.residue)


def inv(a: ModInt) -> ModInt:
    """Multiplicative inverse in Z/m.

    >>> inv(ModInt(10, 49))
    ModInt(5, 49)
    """
    try:
        return ModInt(pow(a.residue, -1, a.modulus), a.modulus)
    except ValueError:
        raise NotInvertible(
            f"{a.residue} is not invertible modulo {a.modulus}"
        ) from None


def pow_mod(a: ModInt, e: int) -> ModInt:
    if e < 0:
        raise ValueError("exponent must be non-negative")
    return ModInt(pow(a.residue, e, a.modulus), a.modulus)


# --------------------------------------------------------------------------
# Coefficient rings for dense polynomials
# --------------------------------------------------------------------------


def _convolve(a: np.ndarray, b: np.ndarray, bound: int | None) -> np.ndarray:
    """Exact 1-D convolution; ``bound`` caps |coefficient| of both inputs.

    Int64 is used only while the worst-case accumulated sum fits; beyond that
    the inputs are widened to Python integers.
    """
    if a.dtype != object and bound is not None:
        if bound * bound * min(len(a), len(b)) <= _INT64_LIMIT:
            return np.convolve(a, b)
    return np.convolve(a.astype(object), b.astype(object))


class IntegerRing:
    """The integers, stored as Python ints in object arrays."""

    characteristic = 0
    elem_shape: tuple[int, ...] = ()
    dtype = object

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr

    def convolve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return np.convolve(a, b)

    def element(self, row) -> int:
        return int(row)

    def to_row(self, c) -> int:
        if isinstance(c, ModInt):
            raise TypeError("cannot coerce a residue into Z")
        return int(c)

    def zero(self) -> int:
        return 0

    def is_field(self) -> bool:
        return False

    def inverse_row(self, row):
        if row in (1, -1):
            return row
        raise InexactDivision(f"{row} is not a unit in Z")

    def exact_quotient(self, arr: np.ndarray, c: int) -> np.ndarray:
        if c == 0:
            raise DivisionByZero("division by zero")
        out = np.empty_like(arr)
        for i, v in enumerate(arr):
            q, r = divmod(int(v), c)
            if r:
                raise InexactDivision(f"coefficient {v} not divisible by {c}")
            out[i] = q
        return out

    def __repr__(self) -> str:
        return "ZZ"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntegerRing)

    def __hash__(self) -> int:
        return hash("ZZ")


ZZ = IntegerRing()


@dataclass(frozen=True)
class ResidueRing:
    """Z/m as a coefficient ring; m = p gives F_p, m = p^2 the p-local quotient."""

    modulus: int

    elem_shape = ()

    @property
    def characteristic(self) -> int:
        return self.modulus

    @property
    def dtype(self):
        return np.int64 if self.modulus <= 2**31 else object

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr % self.modulus

    def convolve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = _convolve(a, b, self.modulus - 1)
        out = out % self.modulus
        return out.astype(self.dtype) if out.dtype != self.dtype else out

    def element(self, row) -> ModInt:
        return ModInt(int(row), self.modulus)

    def to_row(self, c) -> int:
        if isinstance(c, ModInt):
            if c.modulus != self.modulus:
                raise ValueError(f"modulus mismatch: {c.modulus} vs {self.modulus}")
            return c.residue
        return int(c) % self.modulus

    def zero(self) -> ModInt:
        return ModInt(0, self.modulus)

    def is_field(self) -> bool:
        return is_prime(self.modulus)

    def inverse_row(self, row) -> int:
        return inv(ModInt(int(row), self.modulus)).residue

    def exact_quotient(self, arr: np.ndarray, c) -> np.ndarray:
        ci = self.inverse_row(self.to_row(c))
        return self.reduce(arr * ci)

    def __repr__(self) -> str:
        return f"Z/{self.modulus}"


# --------------------------------------------------------------------------
# F_{p^k}
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldSpec:
    """F_p[t]/(modulus) with ``modulus`` monic irreducible of degree k.

    ``modulus`` lists coefficients from t^0 up to and including the leading 1.
    """

    p: int
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.p < 3 or not is_prime(self.p):
            raise ValueError(f"characteristic must be an odd prime, got {self.p}")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")

    @property
    def order(self) -> int:
        return self.p**self.k

    @property
    def characteristic(self) -> int:
        return self.p

    # -- elements -----------------------------------------------------------

    def __call__(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        """Coerce an integer (embedded from F_p) or a coefficient vector."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, ModInt):
            value = value.residue
        if isinstance(value, (int, np.integer)):
            coeffs = (int(value) % self.p,) + (0,) * (self.k - 1)
            return FieldElement(self, coeffs)
        coeffs = tuple(int(c) % self.p for c in value)
        return FieldElement(self, _reduce_mod(coeffs, self.modulus, self.p))

    def zero(self) -> FieldElement:
        return FieldElement(self, (0,) * self.k)

    def one(self) -> FieldElement:
        return self(1)

    def gen(self) -> FieldElement:
        """The class of t."""
        return self((0, 1))

    def from_index(self, idx: int) -> FieldElement:
        """Element whose base-p digits (least significant first) are its coefficients."""
        if not 0 <= idx < self.order:
            raise ValueError(f"index {idx} out of range for F_{self.order}")
        digits = []
        for _ in range(self.k):
            idx, d = divmod(idx, self.p)
            digits.append(d)
        return FieldElement(self, tuple(digits))

    def elements(self) -> Iterator[FieldElement]:
        """All elements, in increasing index order (0 first)."""
        for i in range(self.order):
            yield self.from_index(i)

    # -- coefficient-ring protocol for dense polys ---------------------------

    @property
    def elem_shape(self) -> tuple[int, ...]:
        return (self.k,)

    dtype = np.int64

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        return arr % self.p

    def convolve(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Product of two (n, k) coefficient arrays, reduced modulo (p, modulus)."""
        k, p = self.k, self.p
        if k == 1:
            return (_convolve(a[:, 0], b[:, 0], p - 1) % p)[:, None]
        if k == 2 and self._small_product(a, b):
            a0, a1, b0, b1 = a[:, 0], a[:, 1], b[:, 0], b[:, 1]
            c0 = np.convolve(a0, b0)
            c2 = np.convolve(a1, b1)
            c1 = np.convolve(a0 + a1, b0 + b1) - c0 - (1 + self.modulus[1]) * c2
            c0 -= self.modulus[0] * c2
            out = np.empty((len(c0), 2), dtype=np.int64)
            out[:, 0] = c0
            out[:, 1] = c1
            out %= p
            return out
        n = len(a) + len(b) - 1
        acc = np.zeros((n, 2 * k - 1), dtype=object if p > 2**15 else np.int64)
        for i in range(k):
            for j in range(k):
                acc[:, i + j] += _convolve(a[:, i], b[:, j], p - 1) % p
        g = self.modulus
        for e in range(2 * k - 2, k - 1, -1):
            top = acc[:, e] % p
            for i in range(k):
                if g[i]:
                    acc[:, e - k + i] -= g[i] * top
        return (acc[:, :k] % p).astype(np.int64)

    def _small_product(self, a: np.ndarray, b: np.ndarray) -> bool:
        # worst case |c1| <= (3 + 2p) * 4 * n * (p-1)^2 must fit in int64
        return (3 + 2 * self.p) * 4 * (self.p - 1) ** 2 * min(len(a), len(b)) <= _INT64_LIMIT

    def element(self, row) -> FieldElement:
        return FieldElement(self, tuple(int(c) for c in row))

    def to_row(self, c) -> np.ndarray:
        return np.array(self(c).coeffs, dtype=np.int64)

    def is_field(self) -> bool:
        return True

    def inverse_row(self, row) -> np.ndarray:
        return np.array(self.element(row).inverse().coeffs, dtype=np.int64)

    def exact_quotient(self, arr: np.ndarray, c) -> np.ndarray:
        c = self(c)
        if len(arr) == 0:
            return arr
        if not any(c.coeffs[1:]):
            return (arr * pow(c.coeffs[0], -1, self.p)) % self.p
        ci = np.array(c.inverse().coeffs, dtype=np.int64)
        return self.convolve(arr, ci[None, :])

    # -- vectorized element tables (used by point counting) ------------------

    def element_array(self) -> np.ndarray:
        """All elements as an (order, k) array, row i = element with index i."""
        return _element_table(self)

    def index_of(self, arr: np.ndarray) -> np.ndarray:
        weights = self.p ** np.arange(self.k, dtype=np.int64)
        return (arr % self.p) @ weights

    def mul_arrays(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise products of two (n, k) (or broadcastable) element arrays."""
        k, p = self.k, self.p
        a = np.atleast_2d(a)
        b = np.atleast_2d(b)
        n = max(len(a), len(b))
        acc = np.zeros((n, 2 * k - 1), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                acc[:, i + j] += a[:, i] * b[:, j]
        acc %= p
        g = self.modulus
        for e in range(2 * k - 2, k - 1, -1):
            for i in range(k):
                if g[i]:
                    acc[:, e - k + i] -= g[i] * acc[:, e]
            acc %= p
        return acc[:, :k]

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, modulus={_render_t(self.modulus)})"


@functools.lru_cache(maxsize=64)
def _element_table(spec: FieldSpec) -> np.ndarray:
    idx = np.arange(spec.order, dtype=np.int64)
    cols = []
    for _ in range(spec.k):
        cols.append(idx % spec.p)
        idx = idx // spec.p
    table = np.stack(cols, axis=1)
    table.setflags(write=False)
    return table


def _reduce_mod(coeffs: Sequence[int], modulus: Sequence[int], p: int) -> tuple[int, ...]:
    k = len(modulus) - 1
    c = [x % p for x in coeffs]
    for e in range(len(c) - 1, k - 1, -1):
        top = c[e]
        if top:
            for i in range(k):
                c[e - k + i] = (c[e - k + i] - top * modulus[i]) % p
        c[e] = 0
    c = c[:k] + [0] * (k - len(c))
    return tuple(c)


def _render_t(coeffs: Sequence[int]) -> str:
    terms = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        else:
            terms.append(f"{c}*{mono}")
    return " + ".join(terms) if terms else "0"


@dataclass(frozen=True, slots=True)
class FieldElement:
    """An element of F_{p^k}: a reduced coefficient vector in t (low degree first)."""

    spec: FieldSpec
    coeffs: tuple[int, ...]

    def _other(self, other) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, (int, np.integer, ModInt)):
            return self.spec(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other) -> FieldElement:
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __sub__(self, other) -> FieldElement:
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs))
        )

    def __rsub__(self, other) -> FieldElement:
        return -self + other

    def __neg__(self) -> FieldElement:
        p = self.spec.p
        return FieldElement(self.spec, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other) -> FieldElement:
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        k, p = self.spec.k, self.spec.p
        if k == 1:
            return FieldElement(self.spec, ((self.coeffs[0] * o.coeffs[0]) % p,))
        prod = [0] * (2 * k - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    prod[i + j] += a * b
        return FieldElement(self.spec, _reduce_mod(prod, self.spec.modulus, p))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> FieldElement:
        if e < 0:
            return self.inverse() ** (-e)
        result = self.spec.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> FieldElement:
        if self.is_zero():
            raise DivisionByZero(f"zero has no inverse in {self.spec!r}")
        if not any(self.coeffs[1:]):
            return self.spec(pow(self.coeffs[0], -1, self.spec.p))
        return self ** (self.spec.order - 2)

    def __truediv__(self, other) -> FieldElement:
        o = self._other(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> FieldElement:
        return self.spec(other) * self.inverse()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.coeffs == other.coeffs
        if isinstance(other, (int, np.integer, ModInt)):
            return self.coeffs == self.spec(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec.p, self.spec.modulus, self.coeffs))

    @property
    def index(self) -> int:
        p = self.spec.p
        return sum(c * p**i for i, c in enumerate(self.coeffs))

    def __int__(self) -> int:
        if any(self.coeffs[1:]):
            raise ValueError(f"{self} is not in the prime field")
        return self.coeffs[0]

    def __repr__(self) -> str:
        return f"FieldElement({_render_t(self.coeffs)}, {self.spec!r})"

    def __str__(self) -> str:
        s = _render_t(self.coeffs)
        return f"({s})" if any(self.coeffs[1:]) and "+" in s else s


def _has_root(coeffs: Sequence[int], p: int) -> bool:
    for x in range(p):
        acc = 0
        for c in reversed(coeffs):
            acc = (acc * x + c) % p
        if acc == 0:
            return True
    return False


def find_irreducible(p: int, k: int) -> FieldSpec:
    """First monic irreducible of degree k over F_p, scanning lexicographically.

    Candidates t^k + a_{k-1} t^{k-1} + ... + a_0 are ordered by the tuple
    (a_{k-1}, ..., a_0); for k <= 3 irreducibility is rootlessness.
    """
    if k not in (1, 2, 3):
        raise ValueError("only extension degrees 1, 2, 3 are supported")
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if k == 1:
        return FieldSpec(p, 1, (0, 1))
    for high_first in itertools.product(range(p), repeat=k):
        coeffs = tuple(reversed(high_first)) + (1,)
        if not _has_root(coeffs, p):
            return FieldSpec(p, k, coeffs)
    raise AssertionError("an irreducible polynomial always exists")  # pragma: no cover

