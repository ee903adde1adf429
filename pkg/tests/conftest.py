import numpy as np
import pytest

from polarsearch import Kernel
from polarsearch.gf2 import basis

ARIKAN = ["10", "11"]
F2F2 = ["1000", "1100", "1010", "1111"]


def kron_power(m):
    f = np.array([[1, 0], [1, 1]], dtype=np.uint8)
    out = f
    for _ in range(m - 1):
        out = np.kron(out, f)
    return ["".join(map(str, r)) for r in out]


F2_CUBED = kron_power(3)


def random_invertible(rng, n):
    while True:
        rows = [int(x) for x in rng.integers(0, 1 << n, size=n)]
        if len(basis(rows, n)) == n:
            return Kernel(tuple(rows))


@pytest.fixture
def rng():
    return np.random.default_rng(20211014)
