import numpy as np
import pytest

import polymatkit as pk
from polymatkit.errors import SingularAtZero
from polymatkit.fraction import (
    expansion_slice,
    find_regular_shift,
    proper_tail,
    truncated_inverse,
)
from polymatkit.linalg import det as const_det
from polymatkit.polymat import PolyMatrix, pm_eval, pm_mul, pm_truncate


def anchor(fd):
    return PolyMatrix.from_lists(fd, [[[1], [0, 1]], [[0, 1], [1]]])


def nonsingular_at_zero(fd, n, d, seed):
    rng = np.random.default_rng(seed)
    while True:
        a = pk.rand_instance(n, n, d, int(rng.integers(0, 2**31)), field=fd)
        if const_det(pm_eval(a, 0), fd.p) != 0:
            return a


def test_truncated_inverse_identity(fd):
    s = truncated_inverse(PolyMatrix.identity(fd, 3), 5)
    assert s.to_polymat() == PolyMatrix.identity(fd, 3)


def test_truncated_inverse_geometric(fd):
    a = PolyMatrix.from_lists(fd, [[[1, fd.p - 1]]])  # [[1 - x]]
    s = truncated_inverse(a, 4)
    assert list(s.coeffs[:, 0, 0]) == [1, 1, 1, 1]


def test_truncated_inverse_anchor(fd):
    s = truncated_inverse(anchor(fd), 4)
    m1 = np.array([[0, fd.p - 1], [fd.p - 1, 0]])
    assert np.array_equal(s.coeffs[0], np.eye(2, dtype=np.int64))
    assert np.array_equal(s.coeffs[1], m1)
    assert np.array_equal(s.coeffs[2], np.eye(2, dtype=np.int64))
    assert np.array_equal(s.coeffs[3], m1)


def test_truncated_inverse_product_check(fd, rng):
    for _ in range(30):
        n = int(rng.integers(1, 9))
        d = int(rng.integers(0, 9))
        k = int(rng.integers(1, 65))
        a = nonsingular_at_zero(fd, n, d, int(rng.integers(0, 2**31)))
        s = truncated_inverse(a, k)
        prod = pm_truncate(pm_mul(a, s.to_polymat()), k)
        assert prod == pm_truncate(PolyMatrix.identity(fd, n).to_series(k), k)


def test_truncated_inverse_singular_at_zero(fd):
    a = PolyMatrix.from_lists(fd, [[[0, 1]]])  # [[x]]
    with pytest.raises(SingularAtZero):
        truncated_inverse(a, 3)


def test_expansion_slice_low_window(fd):
    a = anchor(fd)
    sl = expansion_slice(a, a, 0, 1)
    assert np.array_equal(sl.coeffs[0], np.eye(2, dtype=np.int64))


def test_expansion_slice_anchor(fd):
    sl = expansion_slice(anchor(fd), PolyMatrix.identity(fd, 2), 2, 2)
    assert np.array_equal(sl.coeffs[0], np.eye(2, dtype=np.int64))
    assert np.array_equal(sl.coeffs[1], np.array([[0, fd.p - 1], [fd.p - 1, 0]]))


def test_expansion_slice_geometric_far(fd):
    a = PolyMatrix.from_lists(fd, [[[1, fd.p - 1]]])
    b = PolyMatrix.identity(fd, 1)
    sl = expansion_slice(a, b, 100, 3)
    assert list(sl.coeffs[:, 0, 0]) == [1, 1, 1]


def test_fast_path_matches_baseline(fd, rng):
    for trial in range(30):
        n = int(rng.integers(1, 7))
        d = int(rng.integers(1, 7))
        a = nonsingular_at_zero(fd, n, d, int(rng.integers(0, 2**31)))
        b = pk.rand_instance(
            n, int(rng.integers(1, 4)), int(rng.integers(0, d + 1)),
            int(rng.integers(0, 2**31)), field=fd,
        )
        h = int(rng.integers(8 * d, 4 * n * d + 8 * d + 1))
        delta = int(rng.integers(1, 16))
        base = expansion_slice(a, b, h, delta, fast=False)
        fast = expansion_slice(a, b, h, delta, fast=True)
        assert np.array_equal(base.coeffs, fast.coeffs), (trial, n, d, h, delta)


def test_fast_path_falls_back_below_threshold(fd):
    a = anchor(fd)
    b = PolyMatrix.identity(fd, 2)
    base = expansion_slice(a, b, 3, 2, fast=False)
    fast = expansion_slice(a, b, 3, 2, fast=True)  # h < 8d: baseline fallback
    assert np.array_equal(base.coeffs, fast.coeffs)


def test_proper_tail_scalar(fd):
    a = PolyMatrix.from_lists(fd, [[[1, fd.p - 1]]])  # 1 - x, n=1 d=1, h=1
    data = proper_tail(a, 1, 3)
    assert list(data.tail.coeffs[:, 0, 0]) == [1, 1, 1]
    assert data.numerator == PolyMatrix.identity(fd, 1)


def test_proper_tail_anchor(fd):
    data = proper_tail(anchor(fd), 2, 3)
    assert data.numerator == PolyMatrix.identity(fd, 2)
    # tail equals the expansion of the inverse shifted by h=2
    s = truncated_inverse(anchor(fd), 5)
    assert np.array_equal(data.tail.coeffs, s.coeffs[2:5])


def test_proper_tail_identity(fd):
    data = proper_tail(PolyMatrix.identity(fd, 2), 1, 2)
    assert data.numerator.is_zero()
    assert not data.tail.coeffs.any()


def test_proper_tail_invariants_random(fd, rng):
    from polymatkit.poly import MINUS_INFINITY

    for _ in range(20):
        n = int(rng.integers(2, 7))
        d = int(rng.integers(1, 5))
        a = nonsingular_at_zero(fd, n, d, int(rng.integers(0, 2**31)))
        h = (n - 1) * d + 1
        data = proper_tail(a, h, 2 * d + 1)
        numdeg = data.numerator.degree
        assert numdeg == MINUS_INFINITY or numdeg < d
        # A * H === B mod x^sigma
        prod = pm_truncate(pm_mul(a, data.tail.to_polymat()), 2 * d + 1)
        assert prod == pm_truncate(data.numerator.to_series(2 * d + 1), 2 * d + 1)


def test_proper_tail_rejects_small_h(fd):
    a = anchor(fd)
    with pytest.raises(ValueError):
        proper_tail(a, 1, 3)  # need h > (n-1)d = 1


def test_find_regular_shift(fd):
    a = PolyMatrix.from_lists(fd, [[[0, 1]]])  # [[x]]: singular at 0 only
    x0 = find_regular_shift(a, seed=3)
    assert x0 != 0
    assert find_regular_shift(anchor(fd), seed=3) == 0
    zero = PolyMatrix.zero(fd, 1, 1)
    with pytest.raises(SingularAtZero):
        find_regular_shift(zero, seed=3)
