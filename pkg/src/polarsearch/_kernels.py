"""Hot enumeration kernels over bit-packed GF(2) codes.

Every kernel exists twice: a numba ``@njit`` version that walks the code in
Gray-code order (one XOR per word) and a vectorised numpy version that
materialises the span by doubling.  Both return identical results, including
the early-abort witness, so the backend choice never changes search output.

The active backend is chosen once at import time from ``POLARSEARCH_BACKEND``
(``numba`` or ``numpy``); numba is the default when it imports.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@njit(cache=True)
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@njit(cache=True)
def coset_scan_numba(gens, v, n, abort_below):
    """Weight counts of the coset ``span(gens) + v``.

    Returns ``(counts, witness)``.  With ``abort_below > 0`` the walk stops at
    the first word of weight ``< abort_below``; ``counts`` is then meaningless
    and ``witness`` holds that weight.  Otherwise ``witness`` is -1.
    """
    k = gens.shape[0]
    counts = np.zeros(n + 1, dtype=np.int64)
    w = v
    wt = _popcount(w)
    if wt < abort_below:
        return counts, wt
    counts[wt] += 1
    total = np.int64(1) << np.int64(k)
    for i in range(1, total):
        bit = 0
        t = i
        while (t & 1) == 0:
            t >>= 1
            bit += 1
        w ^= gens[bit]
        wt = _popcount(w)
        if wt < abort_below:
            return counts, wt
        counts[wt] += 1
    return counts, np.int64(-1)


@njit(cache=True)
def dual_scan_numba(dual_gens, v, n):
    """Weight counts of ``span(dual_gens)`` and of its subcode orthogonal to ``v``."""
    k = dual_gens.shape[0]
    all_counts = np.zeros(n + 1, dtype=np.int64)
    orth_counts = np.zeros(n + 1, dtype=np.int64)
    all_counts[0] = 1
    orth_counts[0] = 1
    h = np.uint64(0)
    total = np.int64(1) << np.int64(k)
    for i in range(1, total):
        bit = 0
        t = i
        while (t & 1) == 0:
            t >>= 1
            bit += 1
        h ^= dual_gens[bit]
        wt = _popcount(h)
        all_counts[wt] += 1
        if (_popcount(h & v) & 1) == 0:
            orth_counts[wt] += 1
    return all_counts, orth_counts


def _span(gens: np.ndarray) -> np.ndarray:
    # words[i] = XOR of gens[j] over set bits j of i
    words = np.zeros(1, dtype=np.uint64)
    for g in gens:
        words = np.concatenate((words, words ^ g))
    return words


def coset_scan_numpy(gens, v, n, abort_below):
    words = _span(gens) ^ np.uint64(v)
    weights = np.bitwise_count(words).astype(np.int64)
    if abort_below > 0:
        idx = np.arange(words.size, dtype=np.int64)
        gray = weights[idx ^ (idx >> 1)]
        low = np.flatnonzero(gray < abort_below)
        if low.size:
            return np.zeros(n + 1, dtype=np.int64), np.int64(gray[low[0]])
    return np.bincount(weights, minlength=n + 1).astype(np.int64), np.int64(-1)


def dual_scan_numpy(dual_gens, v, n):
    words = _span(dual_gens)
    weights = np.bitwise_count(words).astype(np.int64)
    even = (np.bitwise_count(words & np.uint64(v)) & 1) == 0
    all_counts = np.bincount(weights, minlength=n + 1).astype(np.int64)
    orth_counts = np.bincount(weights[even], minlength=n + 1).astype(np.int64)
    return all_counts, orth_counts


def _select_backend() -> str:
    name = os.environ.get("POLARSEARCH_BACKEND", "numba" if HAVE_NUMBA else "numpy")
    name = name.strip().lower()
    if name not in ("numba", "numpy"):
        raise ValueError(f"POLARSEARCH_BACKEND must be 'numba' or 'numpy', got {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        name = "numpy"
    return name


BACKEND = _select_backend()

if BACKEND == "numba":
    coset_scan = coset_scan_numba
    dual_scan = dual_scan_numba
else:
    coset_scan = coset_scan_numpy
    dual_scan = dual_scan_numpy
