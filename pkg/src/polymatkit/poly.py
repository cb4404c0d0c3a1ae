"""Dense univariate polynomials over a prime field.

Coefficients are stored low-to-high in an int64 numpy array of canonical
residues, with trailing zeros stripped. The zero polynomial has an empty
coefficient array and degree ``MINUS_INFINITY`` (a true sentinel, so degree
arithmetic via ``max`` stays total).
"""

from __future__ import annotations

import math

import numpy as np

from . import ntt
from .errors import DuplicateAbscissa
from .field import FieldElement, PrimeField

MINUS_INFINITY = -math.inf

# Degree below which schoolbook convolution wins over everything else.
SCHOOLBOOK_THRESHOLD = 32

_SPLIT = 1 << 16


def _conv(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact convolution modulo p using a 16-bit split of b."""
    b_hi, b_lo = np.divmod(b, _SPLIT)
    return (np.convolve(a, b_hi) % p * _SPLIT + np.convolve(a, b_lo)) % p


def _mul_coeffs(a: np.ndarray, b: np.ndarray, field: PrimeField) -> np.ndarray:
    """Product of two nonempty coefficient arrays, strategy by size."""
    p = field.p
    small = min(len(a), len(b))
    if small <= SCHOOLBOOK_THRESHOLD:
        return _conv(a, b, p)
    out_len = len(a) + len(b) - 1
    length = ntt.next_pow2(out_len)
    if ntt.supports_length(field, length):
        fa = np.zeros(length, dtype=np.int64)
        fb = np.zeros(length, dtype=np.int64)
        fa[: len(a)] = a
        fb[: len(b)] = b
        prod = ntt.ntt(ntt.ntt(fa, field) * ntt.ntt(fb, field) % p, field, inverse=True)
        return prod[:out_len]
    return _karatsuba(a, b, p)


def _karatsuba(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if min(len(a), len(b)) <= SCHOOLBOOK_THRESHOLD:
        return _conv(a, b, p)
    h = max(len(a), len(b)) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _karatsuba(a0, b0, p) if len(a0) and len(b0) else np.zeros(0, dtype=np.int64)
    z2 = _karatsuba(a1, b1, p) if len(a1) and len(b1) else np.zeros(0, dtype=np.int64)
    sa = np.zeros(max(len(a0), len(a1)), dtype=np.int64)
    sb = np.zeros(max(len(b0), len(b1)), dtype=np.int64)
    sa[: len(a0)] += a0
    sa[: len(a1)] += a1
    sb[: len(b0)] += b0
    sb[: len(b1)] += b1
    z1 = _karatsuba(sa % p, sb % p, p)
    out = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    out[: len(z0)] += z0
    out[h: h + len(z1)] += z1 % p
    out[h: h + len(z0)] -= z0
    out[2 * h: 2 * h + len(z2)] += z2
    out[h: h + len(z2)] -= z2
    return out % p


class Polynomial:
    """Immutable dense polynomial over a PrimeField."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: PrimeField, coeffs=()):
        arr = np.asarray(coeffs, dtype=np.int64).reshape(-1) % field.p
        nz = np.nonzero(arr)[0]
        arr = arr[: nz[-1] + 1] if nz.size else arr[:0]
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", arr)
        arr.flags.writeable = False

    def __setattr__(self, *a):
        raise AttributeError("Polynomial is immutable")

    # -- constructors --

    @classmethod
    def zero(cls, field: PrimeField) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field: PrimeField) -> "Polynomial":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: PrimeField) -> "Polynomial":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, field: PrimeField, c: int) -> "Polynomial":
        return cls(field, (int(c) % field.p,))

    # -- basic queries --

    @property
    def degree(self):
        return len(self.coeffs) - 1 if len(self.coeffs) else MINUS_INFINITY

    def is_zero(self) -> bool:
        return len(self.coeffs) == 0

    def coeff(self, k: int) -> int:
        return int(self.coeffs[k]) if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.field.p, self.coeffs.tobytes()))

    def __repr__(self):
        if self.is_zero():
            return "Poly[0]"
        return "Poly[" + " + ".join(
            f"{c}*x^{k}" if k else str(c)
            for k, c in enumerate(self.coeffs) if c
        ) + "]"

    # -- arithmetic --

    def _check(self, other: "Polynomial"):
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = np.zeros(n, dtype=np.int64)
        out[: len(self.coeffs)] += self.coeffs
        out[: len(other.coeffs)] += other.coeffs
        return Polynomial(self.field, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        out = np.zeros(n, dtype=np.int64)
        out[: len(self.coeffs)] += self.coeffs
        out[: len(other.coeffs)] -= other.coeffs
        return Polynomial(self.field, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, -self.coeffs)

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, FieldElement)):
            return Polynomial(self.field, self.coeffs * (int(other) % self.field.p))
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.field)
        return Polynomial(self.field, _mul_coeffs(self.coeffs, other.coeffs, self.field))

    __rmul__ = __mul__

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return Polynomial(self.field, np.concatenate([np.zeros(k, dtype=np.int64), self.coeffs]))

    def truncate(self, k: int) -> "Polynomial":
        return Polynomial(self.field, self.coeffs[:k])

    def __call__(self, x0) -> FieldElement:
        return poly_eval(self, x0)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """Exact product over K[x]."""
    return a * b


def poly_eval(a: Polynomial, x0) -> FieldElement:
    """Horner evaluation at x0."""
    p = a.field.p
    v = int(x0) % p
    acc = 0
    for c in a.coeffs[::-1]:
        acc = (acc * v + int(c)) % p
    return FieldElement(acc, a.field)


def poly_interpolate(field: PrimeField, points) -> Polynomial:
    """Unique polynomial of degree < len(points) through the given points.

    ``points`` is a sequence of (abscissa, value) pairs with pairwise
    distinct abscissae. Newton's divided differences, O(k^2).
    """
    p = field.p
    xs = [int(x) % p for x, _ in points]
    ys = [int(y) % p for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("interpolation abscissae must be pairwise distinct")
    # divided-difference coefficients
    dd = list(ys)
    for j in range(1, len(xs)):
        for i in range(len(xs) - 1, j - 1, -1):
            num = (dd[i] - dd[i - 1]) % p
            den = (xs[i] - xs[i - j]) % p
            dd[i] = num * pow(den, -1, p) % p
    # Horner assembly of the Newton form
    result = Polynomial.zero(field)
    for i in range(len(xs) - 1, -1, -1):
        factor = Polynomial(field, (-xs[i] % p, 1))
        result = result * factor + Polynomial.constant(field, dd[i])
    return result


def poly_shift_var(a: Polynomial, x0) -> Polynomial:
    """Taylor shift: returns a(x + x0)."""
    p = a.field.p
    v = int(x0) % p
    if v == 0 or a.is_zero():
        return a
    c = a.coeffs.astype(np.int64).tolist()
    n = len(c)
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            c[j] = (c[j] + v * c[j + 1]) % p
    return Polynomial(a.field, c)
