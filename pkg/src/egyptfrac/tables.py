"""Digit-vector enumeration tables feeding the integer kernels.

Row ``i`` of a table is the i-th digit string of length N in lexicographic
order (digit 1 most significant, digits ordered -1 < 0 < 1), so kernel
results map back to the same order :meth:`DigitVec.enumerate` yields.
"""

from __future__ import annotations

from functools import lru_cache
from math import lcm

import numpy as np

from .digitvec import DigitVec2, DigitVec3

MAX_TABLE_LEN = {2: 24, 3: 15}


@lru_cache(maxsize=None)
def digit_table(base: int, n: int) -> np.ndarray:
    if base not in (2, 3) or not 0 <= n <= MAX_TABLE_LEN[base]:
        raise ValueError(f"unsupported table base={base} n={n}")
    idx = np.arange(base**n, dtype=np.int64)
    out = np.empty((base**n, n), dtype=np.int8)
    for col in range(n - 1, -1, -1):
        out[:, col] = idx % base
        idx //= base
    if base == 3:
        out -= 1
    out.setflags(write=False)
    return out


def row_vector(base: int, n: int, i: int):
    """The DigitVec at row ``i`` of ``digit_table(base, n)``."""
    ds = []
    for _ in range(n):
        ds.append(i % base)
        i //= base
    ds.reverse()
    if base == 2:
        return DigitVec2(tuple(ds))
    return DigitVec3(tuple(d - 1 for d in ds))


@lru_cache(maxsize=None)
def sigma_weights(n: int) -> tuple[int, np.ndarray]:
    """``(L, W)`` with ``W[c] = L / (c + 2)``: column c is index c + 1, unit 1/(c + 2)."""
    big = lcm(*range(2, n + 2)) if n else 1
    w = np.array([big // (c + 2) for c in range(n)], dtype=np.int64)
    w.setflags(write=False)
    return big, w


def scaled_sigmas(base: int, n: int) -> np.ndarray:
    """``L * sigma(h(row))`` for every row, as exact int64."""
    _, w = sigma_weights(n)
    return digit_table(base, n).astype(np.int64) @ w


def scaled_values(base: int, n: int) -> np.ndarray:
    """``base**n * [0.row]_base`` for every row."""
    powers = np.array([base ** (n - 1 - c) for c in range(n)], dtype=np.int64)
    return digit_table(base, n).astype(np.int64) @ powers
