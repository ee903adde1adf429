"""The numba and numpy enumeration kernels must agree bit for bit."""

import numpy as np
import pytest

from polarsearch import _kernels
from polarsearch.gf2 import basis

pytestmark = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")


def rand_bits(rng, n):
    return int.from_bytes(rng.bytes(8), "little") & ((1 << n) - 1)


def random_code(rng, n, k):
    while True:
        rows = [rand_bits(rng, n) for _ in range(k)]
        b = basis(rows, n)
        if len(b) == k:
            return np.array(b, dtype=np.uint64)


@pytest.mark.parametrize("n, k", [(4, 0), (4, 2), (9, 5), (16, 8), (31, 12), (64, 10)])
def test_coset_scan_full(rng, n, k):
    gens = random_code(rng, n, k) if k else np.zeros(0, dtype=np.uint64)
    for _ in range(5):
        v = np.uint64(rand_bits(rng, n))
        a, wa = _kernels.coset_scan_numba(gens, v, n, 0)
        b, wb = _kernels.coset_scan_numpy(gens, v, n, 0)
        assert wa == wb == -1
        assert np.array_equal(a, b)
        assert a.sum() == 1 << k


@pytest.mark.parametrize("n, k", [(12, 6), (20, 9)])
def test_coset_scan_abort_witness_matches(rng, n, k):
    gens = random_code(rng, n, k)
    for t in range(1, n):
        v = np.uint64(rand_bits(rng, n))
        _, wa = _kernels.coset_scan_numba(gens, v, n, t)
        _, wb = _kernels.coset_scan_numpy(gens, v, n, t)
        assert wa == wb
        assert wa == -1 or wa < t


def test_dual_scan(rng):
    for n, k in [(6, 3), (13, 7), (24, 11)]:
        gens = random_code(rng, n, k)
        v = np.uint64(rand_bits(rng, n))
        a = _kernels.dual_scan_numba(gens, v, n)
        b = _kernels.dual_scan_numpy(gens, v, n)
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
        assert a[0].sum() == 1 << k
        assert a[1].sum() in (1 << k, 1 << (k - 1))


def test_popcount_high_bit():
    x = np.uint64(0xFFFF_FFFF_FFFF_FFFF)
    assert _kernels._popcount(x) == 64
