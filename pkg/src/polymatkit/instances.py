"""Random instance generation for tests and benchmarks.

Profiles:
  dense-uniform            every coefficient uniform in [0, p)
  planted-rank             product of random n x r and r x m factors
  planted-unbalanced-nullspace
                           last row is a random polynomial combination of
                           the others, so one nullspace vector has a large
                           degree while the rest stay small
"""

from __future__ import annotations

import numpy as np

from .field import PrimeField, default_field
from .polymat import PolyMatrix, pm_mul

PROFILES = ("dense-uniform", "planted-rank", "planted-unbalanced-nullspace")


def _dense(rng, p: int, n: int, m: int, d: int) -> np.ndarray:
    return rng.integers(0, p, size=(d + 1, n, m)).astype(np.int64)


def rand_instance(
    n: int,
    m: int,
    d: int,
    seed=None,
    profile: str = "dense-uniform",
    field: PrimeField | None = None,
    rank: int | None = None,
) -> PolyMatrix:
    """Deterministic (for a fixed seed) random n x m matrix of degree <= d."""
    fld = field or default_field()
    p = fld.p
    rng = np.random.default_rng(seed)

    if profile == "dense-uniform":
        return PolyMatrix(fld, _dense(rng, p, n, m, d))

    if profile == "planted-rank":
        r = rank if rank is not None else max(1, min(n, m) - 1)
        if r > min(n, m):
            raise ValueError(f"planted rank {r} exceeds min(n, m) = {min(n, m)}")
        dl = d // 2
        dr = d - dl
        left = PolyMatrix(fld, _dense(rng, p, n, r, dl))
        right = PolyMatrix(fld, _dense(rng, p, r, m, dr))
        return pm_mul(left, right)

    if profile == "planted-unbalanced-nullspace":
        if n < 2:
            raise ValueError("unbalanced-nullspace profile needs n >= 2")
        top = _dense(rng, p, n - 1, m, d)
        combo = rng.integers(0, p, size=(d + 1, n - 1)).astype(np.int64)
        out = np.zeros((2 * d + 1, n, m), dtype=np.int64)
        out[: d + 1, : n - 1, :] = top
        for k in range(d + 1):
            for i in range(n - 1):
                c = int(combo[k, i])
                if c:
                    out[k: k + d + 1, n - 1, :] = (
                        out[k: k + d + 1, n - 1, :] + c * top[:, i, :]
                    ) % p
        return PolyMatrix(fld, out)

    raise ValueError(f"unknown profile {profile!r}; choose from {PROFILES}")
