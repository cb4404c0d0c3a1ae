"""Polynomial matrices, truncated series matrices, and row-degree predicates.

A PolyMatrix stores its coefficient matrices in a single int64 array of
shape (L, n, m): slice k is the n-by-m coefficient of x**k. Trailing zero
slices are trimmed (the zero matrix keeps a single zero slice), so the
cached degree is always the true maximal entry degree.
"""

from __future__ import annotations

import warnings

import numpy as np

from . import ntt
from .errors import DimensionMismatch, NotSquare, ZeroRow
from .field import FieldElement, PrimeField
from .linalg import mod_matmul, rank as const_rank
from .poly import MINUS_INFINITY, Polynomial


def _normalize(arr: np.ndarray) -> np.ndarray:
    """Trim trailing all-zero slices, keeping at least one."""
    last = arr.shape[0]
    while last > 1 and not arr[last - 1].any():
        last -= 1
    return arr[:last]


class PolyMatrix:
    """Immutable n-by-m matrix over K[x]."""

    __slots__ = ("field", "coeffs", "rows", "cols")

    def __init__(self, field: PrimeField, coeffs: np.ndarray):
        arr = np.asarray(coeffs, dtype=np.int64)
        if arr.ndim != 3:
            raise ValueError("coeffs must have shape (L, rows, cols)")
        arr = _normalize(arr % field.p)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "rows", arr.shape[1])
        object.__setattr__(self, "cols", arr.shape[2])
        arr.flags.writeable = False

    def __setattr__(self, *a):
        raise AttributeError("PolyMatrix is immutable")

    # -- constructors --

    @classmethod
    def zero(cls, field: PrimeField, rows: int, cols: int) -> "PolyMatrix":
        return cls(field, np.zeros((1, rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: PrimeField, n: int) -> "PolyMatrix":
        return cls(field, np.eye(n, dtype=np.int64)[None, :, :])

    @classmethod
    def constant(cls, field: PrimeField, mat) -> "PolyMatrix":
        return cls(field, np.asarray(mat, dtype=np.int64)[None, :, :])

    @classmethod
    def from_lists(cls, field: PrimeField, entries) -> "PolyMatrix":
        """Build from a grid of coefficient lists (low-to-high degree)."""
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        def _len(e):
            return len(e.coeffs) if isinstance(e, Polynomial) else len(e)

        length = max((_len(e) for row in entries for e in row), default=0) or 1
        arr = np.zeros((length, rows, cols), dtype=np.int64)
        for i, row in enumerate(entries):
            if len(row) != cols:
                raise DimensionMismatch("ragged entry grid")
            for j, e in enumerate(row):
                cs = e.coeffs if isinstance(e, Polynomial) else np.asarray(e, dtype=np.int64)
                arr[: len(cs), i, j] = cs
        return cls(field, arr)

    @classmethod
    def from_entries(cls, field: PrimeField, grid) -> "PolyMatrix":
        return cls.from_lists(field, grid)

    # -- queries --

    @property
    def degree(self):
        return MINUS_INFINITY if self.is_zero() else self.coeffs.shape[0] - 1

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> Polynomial:
        return Polynomial(self.field, self.coeffs[:, i, j])

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash((self.field.p, self.rows, self.cols, self.coeffs.tobytes()))

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols}, deg={self.degree}, p={self.field.p})"

    # -- arithmetic --

    def _check_field(self, other: "PolyMatrix"):
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._check_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        length = max(self.coeffs.shape[0], other.coeffs.shape[0])
        out = np.zeros((length, self.rows, self.cols), dtype=np.int64)
        out[: self.coeffs.shape[0]] += self.coeffs
        out[: other.coeffs.shape[0]] += other.coeffs
        return PolyMatrix(self.field, out)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        return self + (-other)

    def __neg__(self) -> "PolyMatrix":
        return PolyMatrix(self.field, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return PolyMatrix(self.field, self.coeffs * (int(other) % self.field.p))
        if isinstance(other, Polynomial):
            return self.scale_poly(other)
        return pm_mul(self, other)

    __matmul__ = __mul__

    def scale_poly(self, f: Polynomial) -> "PolyMatrix":
        """Entry-wise multiplication by a scalar polynomial."""
        if f.is_zero() or self.is_zero():
            return PolyMatrix.zero(self.field, self.rows, self.cols)
        out = np.zeros(
            (self.coeffs.shape[0] + f.coeffs.shape[0] - 1, self.rows, self.cols),
            dtype=np.int64,
        )
        for k, c in enumerate(f.coeffs):
            if c:
                out[k: k + self.coeffs.shape[0]] = (
                    out[k: k + self.coeffs.shape[0]] + int(c) * self.coeffs
                ) % self.field.p
        return PolyMatrix(self.field, out)

    def shift(self, k: int) -> "PolyMatrix":
        """Multiply by x**k."""
        if self.is_zero() or k == 0:
            return self
        pad = np.zeros((k, self.rows, self.cols), dtype=np.int64)
        return PolyMatrix(self.field, np.concatenate([pad, self.coeffs]))

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(self.field, self.coeffs.transpose(0, 2, 1))

    # -- block operations --

    def take_rows(self, idx) -> "PolyMatrix":
        return PolyMatrix(self.field, self.coeffs[:, np.asarray(idx, dtype=np.intp), :])

    def take_cols(self, idx) -> "PolyMatrix":
        return PolyMatrix(self.field, self.coeffs[:, :, np.asarray(idx, dtype=np.intp)])

    @staticmethod
    def vstack(blocks) -> "PolyMatrix":
        blocks = list(blocks)
        field = blocks[0].field
        cols = blocks[0].cols
        length = max(b.coeffs.shape[0] for b in blocks)
        rows = sum(b.rows for b in blocks)
        out = np.zeros((length, rows, cols), dtype=np.int64)
        r = 0
        for b in blocks:
            if b.cols != cols:
                raise DimensionMismatch("vstack column mismatch")
            out[: b.coeffs.shape[0], r: r + b.rows, :] = b.coeffs
            r += b.rows
        return PolyMatrix(field, out)

    @staticmethod
    def hstack(blocks) -> "PolyMatrix":
        blocks = list(blocks)
        field = blocks[0].field
        rows = blocks[0].rows
        length = max(b.coeffs.shape[0] for b in blocks)
        cols = sum(b.cols for b in blocks)
        out = np.zeros((length, rows, cols), dtype=np.int64)
        c = 0
        for b in blocks:
            if b.rows != rows:
                raise DimensionMismatch("hstack row mismatch")
            out[: b.coeffs.shape[0], :, c: c + b.cols] = b.coeffs
            c += b.cols
        return PolyMatrix(field, out)

    def to_series(self, order: int) -> "SeriesMatrix":
        arr = np.zeros((order, self.rows, self.cols), dtype=np.int64)
        take = min(order, self.coeffs.shape[0])
        arr[:take] = self.coeffs[:take]
        return SeriesMatrix(self.field, order, arr)


class SeriesMatrix:
    """Truncated power-series matrix: exactly ``order`` coefficient slices."""

    __slots__ = ("field", "order", "coeffs", "rows", "cols")

    def __init__(self, field: PrimeField, order: int, coeffs: np.ndarray):
        arr = np.asarray(coeffs, dtype=np.int64) % field.p
        if arr.ndim != 3 or arr.shape[0] != order:
            raise ValueError("need exactly `order` coefficient matrices")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", arr)
        object.__setattr__(self, "rows", arr.shape[1])
        object.__setattr__(self, "cols", arr.shape[2])
        arr.flags.writeable = False

    def __setattr__(self, *a):
        raise AttributeError("SeriesMatrix is immutable")

    @classmethod
    def zero(cls, field: PrimeField, order: int, rows: int, cols: int) -> "SeriesMatrix":
        return cls(field, order, np.zeros((order, rows, cols), dtype=np.int64))

    def slice(self, start: int, stop: int) -> "SeriesMatrix":
        return SeriesMatrix(self.field, stop - start, self.coeffs[start:stop])

    def to_polymat(self) -> PolyMatrix:
        return PolyMatrix(self.field, self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.order == other.order
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        return f"SeriesMatrix({self.rows}x{self.cols}, order={self.order}, p={self.field.p})"


# -- multiplication ----------------------------------------------------------

def _mul_ntt(a: np.ndarray, b: np.ndarray, field: PrimeField, out_len: int) -> np.ndarray:
    length = ntt.next_pow2(out_len)
    pa = np.zeros((a.shape[1], a.shape[2], length), dtype=np.int64)
    pb = np.zeros((b.shape[1], b.shape[2], length), dtype=np.int64)
    pa[:, :, : a.shape[0]] = a.transpose(1, 2, 0)
    pb[:, :, : b.shape[0]] = b.transpose(1, 2, 0)
    ea = ntt.ntt(pa, field).transpose(2, 0, 1)
    eb = ntt.ntt(pb, field).transpose(2, 0, 1)
    ec = mod_matmul(ea, eb, field.p)
    prod = ntt.ntt(ec.transpose(1, 2, 0), field, inverse=True)
    return prod.transpose(2, 0, 1)[:out_len]


def _mul_blocks(a: np.ndarray, b: np.ndarray, p: int, out_len: int) -> np.ndarray:
    out = np.zeros((out_len, a.shape[1], b.shape[2]), dtype=np.int64)
    for i in range(a.shape[0]):
        out[i: i + b.shape[0]] = (out[i: i + b.shape[0]] + mod_matmul(a[i], b, p)) % p
    return out


def pm_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Exact product over K[x], by evaluation/interpolation when possible."""
    if a.field != b.field:
        raise ValueError("field mismatch")
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    if a.is_zero() or b.is_zero():
        return PolyMatrix.zero(a.field, a.rows, b.cols)
    out_len = a.coeffs.shape[0] + b.coeffs.shape[0] - 1
    small = min(a.coeffs.shape[0], b.coeffs.shape[0])
    if small > 8 and ntt.supports_length(a.field, ntt.next_pow2(out_len)):
        return PolyMatrix(a.field, _mul_ntt(a.coeffs, b.coeffs, a.field, out_len))
    return PolyMatrix(a.field, _mul_blocks(a.coeffs, b.coeffs, a.field.p, out_len))


def pm_eval(a: PolyMatrix, x0) -> np.ndarray:
    """Entry-wise evaluation; returns a constant (rows, cols) residue array."""
    p = a.field.p
    v = int(x0) % p
    acc = np.zeros((a.rows, a.cols), dtype=np.int64)
    for sl in a.coeffs[::-1]:
        acc = (acc * v + sl) % p
    return acc


def pm_truncate(a, k: int) -> PolyMatrix:
    """Drop all powers >= k; accepts a PolyMatrix or SeriesMatrix."""
    if k < 0:
        raise ValueError("truncation order must be nonnegative")
    field = a.field
    if k == 0:
        return PolyMatrix.zero(field, a.rows, a.cols)
    return PolyMatrix(field, a.coeffs[:k])


def pm_shift_var(a: PolyMatrix, x0) -> PolyMatrix:
    """Entry-wise variable shift x -> x + x0."""
    p = a.field.p
    v = int(x0) % p
    if v == 0 or a.is_zero():
        return a
    c = a.coeffs.copy()
    length = c.shape[0]
    for i in range(length - 1):
        for j in range(length - 2, i - 1, -1):
            c[j] = (c[j] + v * c[j + 1]) % p
    return PolyMatrix(a.field, c)


# -- row-degree predicates ---------------------------------------------------

def row_degrees(a: PolyMatrix) -> list:
    """Per-row maximal entry degree, MINUS_INFINITY for zero rows."""
    out = []
    for i in range(a.rows):
        nz = np.nonzero(a.coeffs[:, i, :].any(axis=1))[0]
        out.append(int(nz[-1]) if nz.size else MINUS_INFINITY)
    return out


def leading_row_matrix(a: PolyMatrix) -> np.ndarray:
    """Constant matrix of the coefficients at each row's row degree."""
    degs = row_degrees(a)
    out = np.zeros((a.rows, a.cols), dtype=np.int64)
    for i, d in enumerate(degs):
        if d is MINUS_INFINITY or d == MINUS_INFINITY:
            raise ZeroRow(f"row {i} is identically zero")
        out[i] = a.coeffs[int(d), i, :]
    return out


def is_row_reduced(a: PolyMatrix, rng=None) -> bool:
    """True iff the row leading matrix has full row rank.

    Full row rank of ``a`` itself is the caller's responsibility; it is
    prechecked at one random point, and a failure only warns.
    """
    rng = np.random.default_rng(rng) if not isinstance(rng, np.random.Generator) else rng
    x0 = int(rng.integers(0, a.field.p))
    if const_rank(pm_eval(a, x0), a.field.p) < a.rows:
        warnings.warn("matrix looks row-rank-deficient at a random point", stacklevel=2)
    return const_rank(leading_row_matrix(a), a.field.p) == a.rows


def is_unimodular(u: PolyMatrix) -> bool:
    """True iff det(u) is a nonzero constant (interpolation determinant)."""
    if not u.is_square():
        raise NotSquare("unimodularity is defined for square matrices")
    from .oracle import det_by_interpolation

    d = det_by_interpolation(u)
    return d.degree == 0
