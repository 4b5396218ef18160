"""Vectorized kernels over many labeled tournaments of one small order.

A batch is an ``(N, m)`` array of out-neighbourhood bitmasks, the same row
layout as :class:`~tournaments.core.Tournament`.  The interval tests here
scan every vertex subset, which is independent of the pairwise-closure
search used by the scalar functions; tests compare the two.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from .core import iter_bits, pair_index

MAX_BATCH_ORDER = 8


def row_dtype(m: int):
    return np.uint8 if m <= 8 else np.uint16


def code_rows(m: int, codes: np.ndarray) -> np.ndarray:
    """Rows of the tournaments encoded by ``codes`` (upper-triangle bits)."""
    codes = np.asarray(codes, dtype=np.uint64)
    dtype = row_dtype(m)
    rows = np.zeros((codes.size, m), dtype=dtype)
    for t, (i, j) in enumerate(pair_index(m)):
        bit = ((codes >> np.uint64(t)) & np.uint64(1)).astype(dtype)
        rows[:, i] |= bit << dtype(j)
        rows[:, j] |= (bit ^ dtype(1)) << dtype(i)
    return rows


def rows_codes(m: int, rows: np.ndarray) -> np.ndarray:
    codes = np.zeros(rows.shape[0], dtype=np.uint64)
    for t, (i, j) in enumerate(pair_index(m)):
        bit = ((rows[:, i] >> j) & 1).astype(np.uint64)
        codes |= bit << np.uint64(t)
    return codes


def _uniform(rows: np.ndarray, x: int, z: int) -> np.ndarray:
    hit = rows[:, z] & x
    return (hit == 0) | (hit == x)


@lru_cache(maxsize=None)
def _subsets(m: int, lo: int, hi: int) -> tuple[int, ...]:
    return tuple(x for x in range(1 << m) if lo <= x.bit_count() <= hi)


def decomposable(rows: np.ndarray, m: int) -> np.ndarray:
    """Boolean mask: does tournament ``r`` have an interval of size ``2..m-1``."""
    full = (1 << m) - 1
    found = np.zeros(rows.shape[0], dtype=bool)
    for x in _subsets(m, 2, m - 1):
        interval = np.ones(rows.shape[0], dtype=bool)
        for z in iter_bits(full & ~x):
            interval &= _uniform(rows, x, z)
        found |= interval
    return found


def non_critical_masks(rows: np.ndarray, m: int) -> np.ndarray:
    """Bitmask of vertices ``v`` with ``T - v`` indecomposable, per tournament.

    Meaningful for indecomposable inputs; the caller filters first.
    """
    full = (1 << m) - 1
    n = rows.shape[0]
    broken = np.zeros((m, n), dtype=bool)
    for x in _subsets(m, 2, m - 2):
        outside = list(iter_bits(full & ~x))
        uniform = {z: _uniform(rows, x, z) for z in outside}
        for v in outside:
            interval = np.ones(n, dtype=bool)
            for z in outside:
                if z != v:
                    interval &= uniform[z]
            broken[v] |= interval
    masks = np.zeros(n, dtype=np.uint16)
    for v in range(m):
        masks |= (~broken[v]).astype(np.uint16) << v
    return masks


def popcount(masks: np.ndarray) -> np.ndarray:
    counts = np.zeros(masks.shape, dtype=np.int64)
    masks = masks.astype(np.int64)
    while np.any(masks):
        counts += masks & 1
        masks >>= 1
    return counts


@lru_cache(maxsize=None)
def _inverse_permutations(m: int) -> np.ndarray:
    perms = np.array(list(permutations(range(m))), dtype=np.int64).reshape(-1, m)
    return np.argsort(perms, axis=1)


def orbit_codes(m: int, rows) -> np.ndarray:
    """Sorted codes of every relabeling of the tournament with ``rows``."""
    dom = np.array([[row >> j & 1 for j in range(m)] for row in rows], dtype=np.uint64)
    inv = _inverse_permutations(m)
    codes = np.zeros(inv.shape[0], dtype=np.uint64)
    for t, (a, b) in enumerate(pair_index(m)):
        codes |= dom[inv[:, a], inv[:, b]] << np.uint64(t)
    return np.unique(codes)


def permute_codes(m: int, codes: np.ndarray, p) -> np.ndarray:
    """Codes of ``apply(T, p)`` for every ``T`` in ``codes``."""
    codes = np.asarray(codes, dtype=np.uint64)
    index = {pair: t for t, pair in enumerate(pair_index(m))}
    inv = [0] * m
    for i, x in enumerate(p):
        inv[x] = i
    out = np.zeros_like(codes)
    for t, (a, b) in enumerate(pair_index(m)):
        i, j = inv[a], inv[b]
        if i < j:
            bit = (codes >> np.uint64(index[(i, j)])) & np.uint64(1)
        else:
            bit = ((codes >> np.uint64(index[(j, i)])) & np.uint64(1)) ^ np.uint64(1)
        out |= bit << np.uint64(t)
    return out
