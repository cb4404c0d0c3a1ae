"""Radix-2 number-theoretic transform, vectorized along the last axis.

Inputs are int64 arrays of canonical residues. The transform length must be
a power of two supported by the field's two-adicity; callers are expected
to check this via PrimeField.root_of_unity.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .field import PrimeField


@lru_cache(maxsize=64)
def _bit_reverse(length: int) -> np.ndarray:
    bits = length.bit_length() - 1
    idx = np.arange(length)
    rev = np.zeros(length, dtype=np.int64)
    for _ in range(bits):
        rev = (rev << 1) | (idx & 1)
        idx >>= 1
    return rev


@lru_cache(maxsize=256)
def _twiddles(p: int, length: int, root: int) -> tuple[np.ndarray, ...]:
    """Per-stage twiddle factors for a length-``length`` transform."""
    stages = []
    span = 2
    while span <= length:
        w = pow(root, length // span, p)
        tw = np.empty(span // 2, dtype=np.int64)
        acc = 1
        for j in range(span // 2):
            tw[j] = acc
            acc = acc * w % p
        stages.append(tw)
        span *= 2
    return tuple(stages)


def ntt(a: np.ndarray, field: PrimeField, inverse: bool = False) -> np.ndarray:
    """Forward or inverse NTT along the last axis of ``a``."""
    length = a.shape[-1]
    if length == 1:
        return a % field.p
    p = field.p
    root = int(field.root_of_unity(length))
    if inverse:
        root = pow(root, -1, p)
    out = (a % p)[..., _bit_reverse(length)].astype(np.int64)
    stages = _twiddles(p, length, root)
    span = 2
    for tw in stages:
        view = out.reshape(*out.shape[:-1], length // span, span)
        even = view[..., : span // 2].copy()
        odd = view[..., span // 2:] * tw % p
        view[..., : span // 2] = (even + odd) % p
        view[..., span // 2:] = (even - odd) % p
        span *= 2
    if inverse:
        out = out * pow(length, -1, p) % p
    return out


def next_pow2(n: int) -> int:
    return 1 << max(0, (n - 1).bit_length())


def supports_length(field: PrimeField, length: int) -> bool:
    return length.bit_length() - 1 <= field.two_adicity and length & (length - 1) == 0
