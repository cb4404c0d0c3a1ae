"""The four applications: generic inverse, determinant, row reduction,
and left factorization from a right one.

Inverse and determinant run the block-elimination recursion on power-of-two
dimensions: at each round the two halves of every diagonal block are
annihilated by minimal nullspace bases whose indices must all equal the
expected degree (the generic pattern is the correctness certificate; any
deviation raises GenericityFailure). Row reduction goes through
expansion/reconstruction of the proper tail of A^{-1}.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    GenericityFailure,
    FieldTooSmall,
    NotPowerOfTwo,
    ReconstructionFailure,
    SingularAtZero,
    SingularInput,
    WrongRowCount,
)
from .fraction import proper_tail
from .linalg import det as const_det, rank as const_rank
from .nullspace import general_nullspace, minimal_vectors_up_to
from .poly import MINUS_INFINITY, Polynomial
from .polymat import PolyMatrix, pm_eval, pm_mul, pm_shift_var
from .reconstruct import LeftFactorization, matfrac_rec


@dataclass(frozen=True)
class InverseRepresentation:
    """U A = B with B diagonal; A^{-1} = B^{-1} U."""

    transform: PolyMatrix
    diagonal: PolyMatrix


def _int_degree(a: PolyMatrix) -> int:
    d = a.degree
    return 0 if d == MINUS_INFINITY else int(d)


def _require_pow2(n: int):
    if n < 1 or n & (n - 1):
        raise NotPowerOfTwo(f"dimension {n} is not a power of two")


def _block_diag(blocks) -> PolyMatrix:
    fld = blocks[0].field
    length = max(b.coeffs.shape[0] for b in blocks)
    n = sum(b.rows for b in blocks)
    out = np.zeros((length, n, n), dtype=np.int64)
    at = 0
    for b in blocks:
        out[: b.coeffs.shape[0], at: at + b.rows, at: at + b.cols] = b.coeffs
        at += b.rows
    return PolyMatrix(fld, out)


def _elimination_pair(block: PolyMatrix, expected_deg: int):
    """Nullspace bases of the two column halves, with the genericity check."""
    s = block.rows
    half = s // 2
    left = block.take_cols(range(half))
    right = block.take_cols(range(half, s))
    top = minimal_vectors_up_to(right, expected_deg)      # annihilates the right half
    bottom = minimal_vectors_up_to(left, expected_deg)    # annihilates the left half
    for basis in (top, bottom):
        if basis.row_count != half or any(d != expected_deg for d in basis.kronecker_degrees):
            if expected_deg == 0 and basis.row_count == half:
                continue  # constant case: degrees are all zero by construction
            raise GenericityFailure(
                f"expected {half} nullspace rows of degree {expected_deg}, "
                f"got {basis.row_count} with degrees {basis.kronecker_degrees}"
            )
    return top, bottom, left, right


def generic_inverse(a: PolyMatrix, seed=None) -> InverseRepresentation:
    """Diagonalizing transform for a generic A with power-of-two dimension."""
    n = a.rows
    _require_pow2(n)
    if not a.is_square():
        raise SingularInput("inverse needs a square matrix")
    d = _int_degree(a)
    rng = np.random.default_rng(seed)
    transform = PolyMatrix.identity(a.field, n)
    blocks = [a]
    step = 1
    while blocks[0].rows > 1:
        expected = 2 ** (step - 1) * d
        new_blocks = []
        round_transforms = []
        for block in blocks:
            top, bottom, left, right = _elimination_pair(block, expected)
            round_transforms.append(PolyMatrix.vstack([top.matrix, bottom.matrix]))
            new_blocks.append(pm_mul(top.matrix, left))
            new_blocks.append(pm_mul(bottom.matrix, right))
        transform = pm_mul(_block_diag(round_transforms), transform)
        blocks = new_blocks
        step += 1

    diagonal = _block_diag(blocks)
    if pm_mul(transform, a) != diagonal:
        raise GenericityFailure("diagonalization product check failed")
    for i in range(n):
        if diagonal.entry(i, i).is_zero():
            raise SingularInput("zero diagonal entry: A is singular")
    x0 = int(rng.integers(1, a.field.p))
    off = diagonal.coeffs.copy()
    for i in range(n):
        off[:, i, i] = 0
    if off.any():
        raise GenericityFailure("diagonalization left off-diagonal entries")
    _ = x0
    return InverseRepresentation(transform, diagonal)


def generic_det(a: PolyMatrix, seed=None) -> Polynomial:
    """det(A) via the upper-left branch of the elimination recursion."""
    n = a.rows
    _require_pow2(n)
    d = _int_degree(a)
    det_a0 = const_det(pm_eval(a, 0), a.field.p)
    if det_a0 == 0:
        raise SingularAtZero("det A(0) = 0; shift before the generic recursion")
    block = a
    step = 1
    while block.rows > 1:
        expected = 2 ** (step - 1) * d
        top, _, left, _ = _elimination_pair(block, expected)
        block = pm_mul(top.matrix, left)
        step += 1
    b11 = block.entry(0, 0)
    b11_at_0 = b11.coeff(0)
    if b11_at_0 == 0:
        raise GenericityFailure("b_{1,1}(0) vanished; cannot rescale")
    scale = det_a0 * pow(b11_at_0, -1, a.field.p) % a.field.p
    return b11 * scale


def row_reduce(a: PolyMatrix, seed=None):
    """Row-reduced R unimodularly left equivalent to a non-singular A.

    Expands the proper tail of A^{-1} at order h = (n-1)d + 1 to 2d + 1
    coefficients and reconstructs it as R^{-1} S. A singular A(0) is handled
    by the shift-and-retry policy; the shift is undone on the output, which
    preserves row degrees and the leading row matrix.
    """
    n = a.rows
    d = _int_degree(a)
    p = a.field.p
    rng = np.random.default_rng(seed)

    if d == 0:
        if const_det(pm_eval(a, 0), p) == 0:
            raise SingularInput("constant matrix is singular")
        return a, {"shift": 0, "numerator": a, "order": 0}

    x0 = None
    tried = set()
    budget = min(p, n * d + 1)
    while len(tried) < budget:
        cand = int(rng.integers(0, p))
        if cand in tried:
            continue
        tried.add(cand)
        if const_det(pm_eval(a, cand), p) != 0:
            x0 = cand
            break
    if x0 is None:
        if len(tried) >= p:
            raise FieldTooSmall("no regular point found in the whole field")
        raise SingularAtZero("no regular expansion point found after retries")

    shifted = pm_shift_var(a, x0) if x0 else a
    h = (n - 1) * d + 1
    data = proper_tail(shifted, h, 2 * d + 1)
    try:
        fact = matfrac_rec(data.tail, d, d)
    except WrongRowCount as exc:
        raise ReconstructionFailure(str(exc)) from exc
    reduced = pm_shift_var(fact.denominator, (-x0) % p) if x0 else fact.denominator
    certificate = {
        "shift": x0,
        "numerator": fact.numerator,
        "order": h,
        "tail": data,
    }
    return reduced, certificate


def left_factorization(b: PolyMatrix, a: PolyMatrix, seed=None) -> LeftFactorization:
    """From a right fraction B A^{-1}, a left pair (U, V) with U A = V B.

    Runs the general nullspace on the stacked [-A; B]; coprimeness of the
    result is not guaranteed.
    """
    if not a.is_square() or b.cols != a.cols:
        raise SingularInput("need square A and compatible B")
    rng = np.random.default_rng(seed)
    n = a.rows
    m = b.rows
    p = a.field.p
    from .oracle import det_by_interpolation

    if det_by_interpolation(a).is_zero():
        raise SingularInput("A must be non-singular")
    stacked = PolyMatrix.vstack([-a, b])
    basis = general_nullspace(stacked, rng)
    if basis.row_count != m:
        raise ReconstructionFailure(
            f"nullspace of the stacked matrix has {basis.row_count} rows, expected {m}"
        )
    numer = basis.matrix.take_cols(range(n))
    denom = basis.matrix.take_cols(range(n, n + m))
    if pm_mul(numer, a) != pm_mul(denom, b):
        raise ReconstructionFailure("U A = V B product check failed")
    x0 = int(rng.integers(0, p))
    if const_rank(pm_eval(denom, x0), p) < m:
        # V is provably non-singular; a random-point rank drop is bad luck
        x1 = int(rng.integers(0, p))
        if const_rank(pm_eval(denom, x1), p) < m and const_det(pm_eval(denom, 0), p) == 0:
            if det_by_interpolation(denom).is_zero():
                raise ReconstructionFailure("V is singular")
    return LeftFactorization(numer, denom)
