"""Kernel codes, coset weight distributions and partial distances.

For a kernel ``K`` of size ``l`` the kernel code at phase ``phi`` is the
``(l, l - phi)`` code spanned by rows ``phi..l-1``.  The partial distance of
row ``phi`` is the minimum weight of the coset ``span(K[phi+1:]) + K[phi]``.

Two routes compute a coset distribution:

* direct: walk all ``2**dim`` coset words, optionally aborting at the first
  word lighter than a target;
* dual: walk the ``2**(n - dim)`` words of the dual code once, split them by
  orthogonality to ``v``, and recover both primal distributions with the
  MacWilliams transform.

``coset_distance`` picks the cheaper route from the phase of the row being
tested: direct when ``phase >= ceil(l/2)``, dual otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from . import _kernels
from .gf2 import (
    BitMatrix,
    BitRow,
    ContractError,
    _parity_check_ints,
    _syndrome_int,
    basis,
    bits_to_str,
    is_column_triangularizable,
    str_to_bits,
)

Pdp = tuple[int, ...]
WeightDistribution = tuple[int, ...]


class SingularKernelError(ValueError):
    """Raised when a kernel matrix is not invertible over GF(2)."""


def direct_threshold(n: int) -> int:
    """Lowest phase measured by direct enumeration for length ``n``."""
    return -(-n // 2)


@dataclass(frozen=True)
class KernelCode:
    """The binary linear code spanned by ``generators``.

    ``phase`` is informational: for a kernel suffix ``K[phase:]`` it records
    where the code came from.  Generators may be dependent; enumeration uses a
    reduced basis.
    """

    generators: tuple[int, ...]
    n: int
    phase: int | None = None

    @classmethod
    def from_strs(cls, rows: Sequence[str], n: int | None = None) -> "KernelCode":
        m = BitMatrix.from_strs(list(rows), n)
        return cls(m.rows, m.ncols)

    @classmethod
    def zero(cls, n: int) -> "KernelCode":
        return cls((), n)

    @cached_property
    def basis(self) -> tuple[int, ...]:
        return tuple(basis(self.generators, self.n))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @cached_property
    def checks(self) -> tuple[int, ...]:
        return tuple(_parity_check_ints(self.basis, self.n))

    @cached_property
    def basis_array(self) -> np.ndarray:
        return np.array(self.basis, dtype=np.uint64)

    @cached_property
    def checks_array(self) -> np.ndarray:
        return np.array(self.checks, dtype=np.uint64)

    def parity_check(self) -> BitMatrix:
        return BitMatrix(self.checks, self.n)

    def contains(self, v: int) -> bool:
        return _syndrome_int(v, self.checks) == 0

    @cached_property
    def weight_distribution(self) -> WeightDistribution:
        return code_weight_distribution(self)


def _as_bits(v: BitRow | int, n: int) -> int:
    if isinstance(v, BitRow):
        if v.length != n:
            raise ContractError(f"vector length {v.length} != code length {n}")
        return v.bits
    return int(v)


@lru_cache(maxsize=None)
def krawtchouk_matrix(n: int) -> tuple[tuple[int, ...], ...]:
    """``K[j][i]`` = Krawtchouk polynomial ``K_j(i)`` for length ``n``.

    Built from ``K_j(0) = C(n, j)`` with the Pascal-style step
    ``K_j(i+1) = K_j(i) - K_{j-1}(i) - K_{j-1}(i+1)``.
    """
    kr = [[0] * (n + 1) for _ in range(n + 1)]
    for j in range(n + 1):
        kr[j][0] = math.comb(n, j)
    for i in range(n):
        kr[0][i + 1] = 1
        for j in range(1, n + 1):
            kr[j][i + 1] = kr[j][i] - kr[j - 1][i] - kr[j - 1][i + 1]
    return tuple(tuple(r) for r in kr)


def macwilliams(a: Sequence[int], n: int, k: int) -> WeightDistribution:
    """Weight distribution of the dual of an ``(n, k)`` code with distribution ``a``.

    Exact integer arithmetic; a non-integral result means ``a`` is not the
    distribution of any ``(n, k)`` linear code and raises ContractError.
    """
    if len(a) != n + 1:
        raise ContractError(f"distribution has {len(a)} entries, expected {n + 1}")
    a = [int(x) for x in a]
    if sum(a) != 1 << k:
        raise ContractError(f"distribution sums to {sum(a)}, not 2**{k}")
    kr = krawtchouk_matrix(n)
    out = []
    for j in range(n + 1):
        s = sum(ai * kj for ai, kj in zip(a, kr[j]) if ai)
        q, r = divmod(s, 1 << k)
        if r or q < 0:
            raise ContractError(f"MacWilliams transform is not integral at weight {j}")
        out.append(q)
    return tuple(out)


def _direct(v: int, code: KernelCode, abort_below: int) -> tuple[int, WeightDistribution | None]:
    counts, witness = _kernels.coset_scan(code.basis_array, np.uint64(v), code.n, abort_below)
    if witness >= 0:
        return int(witness), None
    dist = tuple(int(c) for c in counts)
    return next(w for w, c in enumerate(dist) if c), dist


def _dual(v: int, code: KernelCode) -> tuple[int, WeightDistribution]:
    n, k = code.n, code.dimension
    if code.contains(v):
        dist = code.weight_distribution
        return 0, dist
    all_counts, orth_counts = _kernels.dual_scan(code.checks_array, np.uint64(v), n)
    a_code = macwilliams(all_counts, n, n - k)
    a_ext = macwilliams(orth_counts, n, n - k - 1)
    dist = tuple(x - y for x, y in zip(a_ext, a_code))
    return next(w for w, c in enumerate(dist) if c), dist


def coset_distance_direct(
    v: BitRow | int, code: KernelCode, abort_below: int | None = None
) -> tuple[int, WeightDistribution | None]:
    """Minimum weight and weight distribution of ``code + v`` by enumeration.

    With ``abort_below=t`` the walk stops at the first coset word of weight
    ``< t`` (in Gray-code order) and returns that weight with no
    distribution.  A ``v`` inside the code yields distance 0.
    """
    bits = _as_bits(v, code.n)
    return _direct(bits, code, abort_below or 0)


def coset_distance_dual(v: BitRow | int, code: KernelCode) -> tuple[int, WeightDistribution]:
    """Same result as :func:`coset_distance_direct`, computed through the dual code."""
    return _dual(_as_bits(v, code.n), code)


def use_direct(code: KernelCode, threshold: int | None = None) -> bool:
    # The row being tested sits at phase n - dim - 1.
    phase = code.n - code.dimension - 1
    if threshold is None:
        threshold = direct_threshold(code.n)
    return phase >= threshold


def coset_distance(
    v: BitRow | int,
    code: KernelCode,
    abort_below: int | None = None,
    threshold: int | None = None,
) -> tuple[int, WeightDistribution | None]:
    bits = _as_bits(v, code.n)
    if use_direct(code, threshold):
        return _direct(bits, code, abort_below or 0)
    return _dual(bits, code)


def code_weight_distribution(code: KernelCode) -> WeightDistribution:
    """Weight distribution of the code itself, via whichever side is smaller."""
    n, k = code.n, code.dimension
    if k <= n - k:
        counts, _ = _kernels.coset_scan(code.basis_array, np.uint64(0), n, 0)
        return tuple(int(c) for c in counts)
    dual_counts, _ = _kernels.dual_scan(code.checks_array, np.uint64(0), n)
    return macwilliams(dual_counts, n, n - k)


def min_distance(code: KernelCode) -> float:
    """Minimum nonzero weight; ``math.inf`` for the zero code."""
    if code.dimension == 0:
        return math.inf
    dist = code_weight_distribution(code)
    return next(w for w in range(1, code.n + 1) if dist[w])


@dataclass(frozen=True)
class Kernel:
    """An ``l x l`` binary matrix, row ``i`` packed with column ``j`` in bit ``j``."""

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        if not 0 < n <= 64:
            raise ContractError(f"kernel size must be in [1, 64], got {n}")
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        for r in self.rows:
            if r < 0 or r >> n:
                raise ContractError(f"row {r:#x} does not fit in {n} columns")

    @classmethod
    def from_strs(cls, rows: Sequence[str]) -> "Kernel":
        rows = [r.strip() for r in rows]
        n = len(rows)
        for r in rows:
            if len(r) != n or set(r) - {"0", "1"}:
                raise ContractError(f"expected {n} characters of 0/1, got {r!r}")
        return cls(tuple(str_to_bits(r) for r in rows))

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_strs(self) -> list[str]:
        return [bits_to_str(r, self.size) for r in self.rows]

    def matrix(self) -> BitMatrix:
        return BitMatrix(self.rows, self.size)

    def code(self, phase: int) -> KernelCode:
        if not 0 <= phase <= self.size:
            raise ContractError(f"phase {phase} outside [0, {self.size}]")
        return KernelCode(self.rows[phase:], self.size, phase)

    def is_invertible(self) -> bool:
        return len(basis(self.rows, self.size)) == self.size

    def is_polarizing(self) -> bool:
        return self.is_invertible() and not is_column_triangularizable(self.matrix())

    def add_row(self, src: int, dst: int) -> "Kernel":
        rows = list(self.rows)
        rows[dst] ^= rows[src]
        return Kernel(tuple(rows))


def verify_kernel(k: Kernel, threshold: int | None = None) -> Pdp:
    """Exact partial-distance profile of ``k``.

    Rows at phase ``>= threshold`` (default ``ceil(l/2)``) are measured by
    direct coset enumeration, the rest through the dual code.
    """
    if not k.is_invertible():
        raise SingularKernelError("kernel is singular over GF(2)")
    n = k.size
    if threshold is None:
        threshold = direct_threshold(n)
    pdp = []
    for phi in range(n):
        code = k.code(phi + 1)
        if phi >= threshold:
            d, _ = _direct(k.rows[phi], code, 0)
        else:
            d, _ = _dual(k.rows[phi], code)
        pdp.append(d)
    return tuple(pdp)


def rate_of_polarization(d: Sequence[int]) -> float:
    """``(1/l) * sum(log_l D_i)``."""
    n = len(d)
    if n < 2:
        raise ContractError("rate of polarization needs l >= 2")
    if any(x < 1 for x in d):
        raise ContractError("partial distances must be positive")
    return sum(math.log(x) for x in d) / (n * math.log(n))
