"""Independent brute-force references for the fast primitives.

Everything here favours transparency over speed: naive triple loops,
dense K-linear systems realizing the module definitions directly, and
series division with Cramer-bound truncation orders. Size guards reject
inputs that would make the exponential honesty silent instead of loud.
"""

from __future__ import annotations

import numpy as np

from .approxbasis import ApproximantBasis
from .errors import CapTooSmall, DimensionMismatch, FieldTooSmall, SingularInput
from .fraction import find_regular_shift, truncated_inverse
from .field import PrimeField
from .linalg import left_kernel, det as const_det, rank as const_rank
from .nullspace import NullspaceBasis
from .poly import MINUS_INFINITY, Polynomial, poly_interpolate
from .polymat import (
    PolyMatrix,
    SeriesMatrix,
    pm_eval,
    pm_mul,
    pm_shift_var,
    pm_truncate,
    row_degrees,
)


def naive_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Triple-loop product of Polynomial entries; the oracle for pm_mul."""
    if a.cols != b.rows:
        raise DimensionMismatch("naive_mul shape mismatch")
    grid = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = Polynomial.zero(a.field)
            for k in range(a.cols):
                acc = acc + a.entry(i, k) * b.entry(k, j)
            row.append(acc)
        grid.append(row)
    return PolyMatrix.from_entries(a.field, grid)


def det_by_interpolation(a: PolyMatrix) -> Polynomial:
    """det(A) by evaluation at n*deg(A)+1 points plus interpolation."""
    if not a.is_square():
        raise DimensionMismatch("determinant of a non-square matrix")
    n = a.rows
    if n == 0:
        return Polynomial.one(a.field)
    d = 0 if a.degree == MINUS_INFINITY else int(a.degree)
    count = n * d + 1
    if a.field.p < count:
        raise FieldTooSmall(f"need {count} distinct points, p = {a.field.p}")
    pts = [(x, const_det(pm_eval(a, x), a.field.p)) for x in range(count)]
    return poly_interpolate(a.field, pts)


# -- degree-bounded K-linear solvers -----------------------------------------

def _degree_bounded_solutions(eq_builder, n: int, t: int, p: int) -> np.ndarray:
    """Kernel rows (flattened degree-<=t row vectors) of a coefficient system.

    ``eq_builder(j, k)`` returns the equation-row contribution of unknown
    coefficient (row j of the vector, degree k) as a flat residue array.
    """
    cols = eq_builder(0, 0).shape[0]
    system = np.zeros((n * (t + 1), cols), dtype=np.int64)
    for j in range(n):
        for k in range(t + 1):
            system[j * (t + 1) + k] = eq_builder(j, k)
    return left_kernel(system, p)


class _SpanTracker:
    """Incremental K-span membership over flattened vectors."""

    def __init__(self, p: int, width: int):
        self.p = p
        self.width = width
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    def _reduce(self, v: np.ndarray) -> np.ndarray:
        v = v.copy() % self.p
        for row, piv in zip(self.rows, self.pivots):
            c = int(v[piv])
            if c:
                v = (v - c * row) % self.p
        return v

    def add_if_new(self, v: np.ndarray) -> bool:
        r = self._reduce(v)
        nz = np.nonzero(r)[0]
        if nz.size == 0:
            return False
        piv = int(nz[0])
        r = r * pow(int(r[piv]), -1, self.p) % self.p
        self.rows.append(r)
        self.pivots.append(piv)
        return True


def _greedy_minimal_rows(solutions_at, n: int, width_of, t_max: int, p: int, need: int):
    """Greedy minimal-degree basis extraction shared by the two oracles.

    ``solutions_at(t)`` yields kernel rows for degree bound t;
    ``width_of(t)`` is the flattened length n*(t+1). Chosen rows of degree
    <= t-1, shifted by powers of x, must span the degree-<= t solution
    space before new degree-t rows are admitted.
    """
    chosen: list[tuple[int, np.ndarray]] = []  # (degree, coeff slices (deg+1, n))
    for t in range(t_max + 1):
        width = width_of(t)
        span = _SpanTracker(p, width)
        for deg, coeffs in chosen:
            for s in range(t - deg + 1):
                flat = np.zeros((n, t + 1), dtype=np.int64)
                flat[:, s: s + deg + 1] = coeffs.T
                span.add_if_new(flat.reshape(-1))
        for vec in solutions_at(t):
            if len(chosen) == need:
                break
            if span.add_if_new(vec):
                arr = vec.reshape(n, t + 1).T  # (t+1, n) slices
                chosen.append((t, arr))
        if len(chosen) == need:
            break
    return chosen


def minimal_basis_bruteforce(f: SeriesMatrix, sigma: int) -> ApproximantBasis:
    """Order basis by direct search over degree-bounded linear systems.

    Realizes minimality by construction: degree bounds t = 0, 1, ... are
    tried in order and solution vectors are admitted only when they leave
    the span of everything already chosen. Small sizes only.
    """
    n, m = f.rows, f.cols
    if n > 4 or sigma > 8:
        raise ValueError("brute-force order basis is limited to n <= 4, sigma <= 8")
    p = f.field.p
    fc = f.coeffs

    def solutions_at(t: int) -> np.ndarray:
        def eq(j: int, k: int) -> np.ndarray:
            rows = []
            for s in range(sigma):
                rows.append(fc[s - k, j, :] if 0 <= s - k < sigma else np.zeros(m, dtype=np.int64))
            return np.concatenate(rows)

        return _degree_bounded_solutions(eq, n, t, p)

    chosen = _greedy_minimal_rows(solutions_at, n, lambda t: n * (t + 1), sigma, p, n)
    length = max(deg for deg, _ in chosen) + 1
    arr = np.zeros((length, n, n), dtype=np.int64)
    for i, (deg, coeffs) in enumerate(chosen):
        arr[: deg + 1, i, :] = coeffs
    mat = PolyMatrix(f.field, arr)
    return ApproximantBasis(mat, sigma, row_degrees(mat))


def true_rank(a: PolyMatrix) -> int:
    """Deterministic rank over K(x): max over enough evaluation points."""
    d = 0 if a.degree == MINUS_INFINITY else int(a.degree)
    count = min(a.field.p, min(a.rows, a.cols) * d + 1)
    return max(const_rank(pm_eval(a, x), a.field.p) for x in range(count))


def nullspace_bruteforce(a: PolyMatrix, degree_cap: int) -> NullspaceBasis:
    """Minimal left nullspace vectors up to degree_cap, by dense search."""
    n, m = a.rows, a.cols
    p = a.field.p
    if n * (degree_cap + 1) > 512:
        raise ValueError("brute-force nullspace limited to n*(cap+1) <= 512")
    d = 0 if a.degree == MINUS_INFINITY else int(a.degree)
    r = true_rank(a)
    need = n - r
    ac = a.coeffs

    def solutions_at(t: int) -> np.ndarray:
        out_len = t + d + 1

        def eq(j: int, k: int) -> np.ndarray:
            rows = []
            for s in range(out_len):
                rows.append(ac[s - k, j, :] if 0 <= s - k < ac.shape[0] else np.zeros(m, dtype=np.int64))
            return np.concatenate(rows)

        return _degree_bounded_solutions(eq, n, t, p)

    chosen = _greedy_minimal_rows(solutions_at, n, lambda t: n * (t + 1), degree_cap, p, need)
    if len(chosen) < need:
        raise CapTooSmall(
            f"found {len(chosen)} of {need} nullspace vectors below degree {degree_cap}"
        )
    length = max((deg for deg, _ in chosen), default=0) + 1
    arr = np.zeros((length, len(chosen), n), dtype=np.int64)
    for i, (deg, coeffs) in enumerate(chosen):
        arr[: deg + 1, i, :] = coeffs
    mat = PolyMatrix(a.field, arr)
    return NullspaceBasis(mat, sorted(deg for deg, _ in chosen), True, input_rank=r)


def unimodular_equiv_check(a: PolyMatrix, r: PolyMatrix, seed=None) -> bool:
    """True iff r = u a for a unimodular u (series division + Cramer bound)."""
    if det_by_interpolation(a).is_zero():
        raise SingularInput("equivalence check needs a non-singular reference")
    if (a.rows, a.cols) != (r.rows, r.cols) or not a.is_square():
        raise DimensionMismatch("equivalence check needs same-size square matrices")
    n = a.rows
    da = 0 if a.degree == MINUS_INFINITY else int(a.degree)
    dr = 0 if r.degree == MINUS_INFINITY else int(r.degree)
    bound = (n - 1) * da + dr  # deg(R * adj(A)) upper bound, before det division
    order = bound + da + 2
    x0 = find_regular_shift(a, seed)
    a_sh = pm_shift_var(a, x0)
    r_sh = pm_shift_var(r, x0)
    series = pm_truncate(pm_mul(r_sh, truncated_inverse(a_sh, order).to_polymat()), order)
    candidate = pm_truncate(series, bound + 1)
    if pm_mul(candidate, a_sh) != r_sh:
        return False
    from .polymat import is_unimodular

    return is_unimodular(candidate)
