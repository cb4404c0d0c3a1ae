import numpy as np
import pytest

import polymatkit as pk
from polymatkit.errors import RankDeficient
from polymatkit.nullspace import (
    general_nullspace,
    minimal_vectors_up_to,
    partial_nullspace,
    rank,
)
from polymatkit.oracle import nullspace_bruteforce, true_rank
from polymatkit.polymat import PolyMatrix


def singular_2x2(fd):
    """[[x, x^2], [1, x]] — identically singular, rank 1."""
    return PolyMatrix.from_lists(fd, [[[0, 1], [0, 0, 1]], [[1], [0, 1]]])


def test_rank_identity_and_zero(fd):
    assert rank(PolyMatrix.identity(fd, 4), 1) == 4
    assert rank(PolyMatrix.zero(fd, 3, 3), 1) == 0


def test_rank_singular(fd):
    assert rank(singular_2x2(fd), 1) == 1


def test_minimal_vectors_identity_empty(fd):
    basis = minimal_vectors_up_to(PolyMatrix.identity(fd, 3), 5)
    assert basis.row_count == 0
    assert basis.kronecker_degrees == []


def test_minimal_vectors_singular_2x2(fd):
    a = singular_2x2(fd)
    basis = minimal_vectors_up_to(a, 1)
    assert basis.row_count == 1
    assert basis.kronecker_degrees == [1]
    assert pk.pm_mul(basis.matrix, a).is_zero()


def test_minimal_vectors_column(fd):
    # A = [x, 1]^T: left nullspace spanned by (1, -x)
    a = PolyMatrix.from_lists(fd, [[[0, 1]], [[1]]])
    basis = minimal_vectors_up_to(a, 1)
    assert basis.row_count == 1
    assert basis.kronecker_degrees == [1]
    assert pk.pm_mul(basis.matrix, a).is_zero()


def test_count_sweep_matches_kronecker_indices(fd, rng):
    # degree-<=delta rows appear exactly when delta reaches the Kronecker index
    for trial in range(20):
        n = int(rng.integers(2, 6))
        d = int(rng.integers(1, 4))
        r = int(rng.integers(1, n))
        a = pk.rand_instance(
            n, n, d, int(rng.integers(0, 2**31)), profile="planted-rank",
            field=fd, rank=r,
        )
        tr = true_rank(a)
        ref = nullspace_bruteforce(a, n * d)
        kmax = max(ref.kronecker_degrees) if ref.kronecker_degrees else 0
        got = minimal_vectors_up_to(a, kmax)
        assert got.row_count == n - tr
        assert sorted(got.kronecker_degrees) == sorted(ref.kronecker_degrees)
        if kmax > 0:
            below = minimal_vectors_up_to(a, kmax - 1)
            assert below.row_count < n - tr


def test_partial_nullspace_planted_constant(fd, rng):
    # A = [C; D C] with C nonsingular: nullspace rows are [-D | I], degree 0
    n, m = 4, 2
    c = pk.rand_instance(n, n, 2, 91, field=fd)
    dmat = rng.integers(0, fd.p, size=(m, n))
    bottom = pk.pm_mul(PolyMatrix.constant(fd, dmat), c)
    a = PolyMatrix.vstack([c, bottom])
    basis = partial_nullspace(a, 0, seed=3)
    assert basis.row_count == m
    assert all(deg == 0 for deg in basis.kronecker_degrees)
    assert pk.pm_mul(basis.matrix, a).is_zero()


def test_partial_nullspace_stacked_identity(fd):
    a = PolyMatrix.vstack([PolyMatrix.identity(fd, 3), PolyMatrix.zero(fd, 2, 3)])
    basis = partial_nullspace(a, 0, seed=5)
    assert basis.row_count == 2
    assert pk.pm_mul(basis.matrix, a).is_zero()


def test_partial_nullspace_column(fd):
    a = PolyMatrix.from_lists(fd, [[[0, 1]], [[1]]])
    basis = partial_nullspace(a, 1, seed=7)
    assert basis.row_count == 1
    assert pk.pm_mul(basis.matrix, a).is_zero()


def test_partial_nullspace_rank_deficient_rejected(fd):
    a = PolyMatrix.zero(fd, 3, 2)
    with pytest.raises(RankDeficient):
        partial_nullspace(a, 1, seed=1)


def test_general_nullspace_nonsingular(fd):
    a = pk.rand_instance(3, 3, 2, 101, field=fd)
    basis = general_nullspace(a, 1)
    assert basis.row_count == 0
    assert basis.input_rank == 3


def test_general_nullspace_singular_2x2(fd):
    a = singular_2x2(fd)
    basis = general_nullspace(a, 1)
    assert basis.input_rank == 1
    assert basis.row_count == 1
    assert pk.pm_mul(basis.matrix, a).is_zero()


def test_general_nullspace_outer_product(fd, rng):
    # rank-1 outer product u v^T with degree-1 factors, n = 4
    u = pk.rand_instance(4, 1, 1, 111, field=fd)
    v = pk.rand_instance(1, 4, 1, 112, field=fd)
    a = pk.pm_mul(u, v)
    basis = general_nullspace(a, 2)
    assert basis.input_rank == 1
    assert basis.row_count == 3
    assert pk.pm_mul(basis.matrix, a).is_zero()
    x0 = int(rng.integers(0, fd.p))
    from polymatkit.linalg import rank as crank
    assert crank(pk.pm_eval(basis.matrix, x0), fd.p) == 3
    assert max(basis.kronecker_degrees) <= 4 * 1  # n*d bound


def test_general_nullspace_unbalanced_profile(fd):
    a = pk.rand_instance(
        4, 4, 2, 121, profile="planted-unbalanced-nullspace", field=fd
    )
    basis = general_nullspace(a, 3)
    assert basis.row_count == 4 - basis.input_rank
    assert basis.row_count >= 1
    assert pk.pm_mul(basis.matrix, a).is_zero()


def test_monotonicity_of_thresholds(fd, rng):
    a = pk.rand_instance(4, 4, 2, 131, profile="planted-rank", field=fd, rank=2)
    counts = []
    for delta in (0, 2, 4, 8):
        counts.append(minimal_vectors_up_to(a, delta).row_count)
    assert counts == sorted(counts)
