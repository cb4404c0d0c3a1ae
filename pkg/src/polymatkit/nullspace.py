"""Nullspace computations driven by approximant bases.

A minimal approximant basis of order delta + d + 1 for a degree-d matrix
contains exactly the minimal nullspace vectors of degree at most delta
(their degrees are the left Kronecker indices). The routines here select
those rows, optionally after a random column compression for tall inputs,
and always verify v A = 0 exactly before returning (Las Vegas contract).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .approxbasis import pmbasis
from .errors import FieldTooSmall, RankDeficient, RetriesExhausted
from .linalg import rank as const_rank
from .poly import MINUS_INFINITY
from .polymat import PolyMatrix, pm_eval, pm_mul, row_degrees

MAX_RETRIES = 8


@dataclass(frozen=True)
class NullspaceBasis:
    """Rows spanning (part of) the left nullspace of a polynomial matrix."""

    matrix: PolyMatrix
    kronecker_degrees: list
    certified_minimal: bool
    input_rank: int | None = None

    @property
    def row_count(self) -> int:
        return self.matrix.rows


def _empty_basis(a: PolyMatrix, certified: bool = True, input_rank=None) -> NullspaceBasis:
    empty = PolyMatrix(a.field, np.zeros((1, 0, a.rows), dtype=np.int64))
    return NullspaceBasis(empty, [], certified, input_rank)


def _int_degree(a: PolyMatrix) -> int:
    d = a.degree
    return 0 if d == MINUS_INFINITY else int(d)


def rank(a: PolyMatrix, seed=None) -> int:
    """Monte Carlo rank of A over K(x): rank of A at one random point."""
    rng = np.random.default_rng(seed)
    n, d = max(a.rows, a.cols), _int_degree(a)
    if a.field.p <= 2 * n * d:
        raise FieldTooSmall(f"p={a.field.p} too small for rank at n={n}, d={d}")
    x0 = int(rng.integers(0, a.field.p))
    return const_rank(pm_eval(a, x0), a.field.p)


def minimal_vectors_up_to(a: PolyMatrix, delta: int) -> NullspaceBasis:
    """All minimal left nullspace vectors of A of degree at most delta.

    Computes an order basis of order delta + deg(A) + 1 and keeps the rows
    of degree at most delta; those are certified by an exact product check.
    """
    d = _int_degree(a)
    sigma = delta + d + 1
    basis = pmbasis(a.to_series(sigma), sigma)
    degs = row_degrees(basis.basis)
    sel = [i for i, dd in enumerate(degs) if dd != MINUS_INFINITY and dd <= delta]
    sel.sort(key=lambda i: (degs[i], i))
    if not sel:
        return _empty_basis(a)
    rows = basis.basis.take_rows(sel)
    if not pm_mul(rows, a).is_zero():
        raise AssertionError("order-basis selection failed its nullspace check")
    return NullspaceBasis(rows, [degs[i] for i in sel], True)


def partial_nullspace(a: PolyMatrix, delta: int, seed=None) -> NullspaceBasis:
    """Minimal nullspace vectors of degree <= delta for a tall full-column-rank A.

    Fast path compresses the (n+m) x n input to (n+m) x m with a random
    constant matrix, computes the order basis there, and verifies every
    selected row against the original A; any failure triggers a retry with
    fresh randomness (Las Vegas).
    """
    rng = np.random.default_rng(seed)
    p = a.field.p
    ncols = a.cols
    m = a.rows - ncols
    if m < 0 or m > ncols:
        raise RankDeficient(f"expected (n+m) x n with m <= n, got {a.rows} x {a.cols}")
    x0 = int(rng.integers(0, p))
    if const_rank(pm_eval(a, x0), p) < ncols:
        raise RankDeficient("input looks column-rank deficient at a random point")
    if m == 0:
        return _empty_basis(a)

    for _ in range(MAX_RETRIES):
        compress = PolyMatrix.constant(a.field, rng.integers(0, p, size=(ncols, m)))
        compressed = pm_mul(a, compress)
        d = _int_degree(compressed)
        sigma = delta + d + 1
        basis = pmbasis(compressed.to_series(sigma), sigma)
        degs = row_degrees(basis.basis)
        sel = [i for i, dd in enumerate(degs) if dd != MINUS_INFINITY and dd <= delta]
        sel.sort(key=lambda i: (degs[i], i))
        if not sel:
            return _empty_basis(a)
        rows = basis.basis.take_rows(sel)
        # If every low-degree row of the compressed order basis annihilates
        # the original matrix, the degree-<=delta parts of the two nullspace
        # modules coincide (null(A) is contained in null(AP), and these rows
        # generate the latter), so the result is certified complete and
        # minimal. Any failing row means the compression admitted spurious
        # vectors; retry with fresh randomness.
        if pm_mul(rows, a).is_zero():
            return NullspaceBasis(rows, [degs[i] for i in sel], True)
    # unlucky (or structurally spurious-prone) compressions: fall back to the
    # exact order-basis computation on A itself, which is always correct
    return minimal_vectors_up_to(a, delta)


def general_nullspace(a: PolyMatrix, seed=None) -> NullspaceBasis:
    """Rank and a full-row-rank basis of the left nullspace of a square A.

    Sweeps degree thresholds d, 2d, 4d, ... up to n*d (the range of the
    Kronecker indices) and stops as soon as n - rank(A) independent vectors
    are found. Each sweep result is exact, so the output is a genuine
    minimal basis and is certified as such.
    """
    rng = np.random.default_rng(seed)
    n = a.rows
    d = _int_degree(a)
    r = max(rank(a, rng) for _ in range(3))
    target = n - r
    if target == 0:
        return _empty_basis(a, input_rank=r)

    delta = max(d, 1)
    cap = max(n * d, 1)
    while True:
        found = minimal_vectors_up_to(a, min(delta, cap))
        if found.row_count >= target or delta >= cap:
            break
        delta *= 2
    x0 = int(rng.integers(0, a.field.p))
    got = found.row_count
    if got and const_rank(pm_eval(found.matrix, x0), a.field.p) < got:
        raise RetriesExhausted("nullspace rows dependent at a random point")
    return NullspaceBasis(
        found.matrix, found.kronecker_degrees, True, input_rank=n - got
    )
