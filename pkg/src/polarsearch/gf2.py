"""Bit-packed linear algebra over GF(2).

A row of length ``n`` is packed into one integer with column ``j`` stored in
bit ``j``, so the string ``"1000"`` is the integer 1.  Rows are capped at 64
columns, which keeps every row inside one ``uint64`` for the numeric kernels.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_LEN = 64


class ContractError(ValueError):
    """Raised when an operation is called outside its preconditions."""


def _check_len(n: int) -> None:
    if not 0 < n <= MAX_LEN:
        raise ContractError(f"row length must be in [1, {MAX_LEN}], got {n}")


@dataclass(frozen=True)
class BitRow:
    """A binary vector of length ``length`` packed into ``bits``."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        _check_len(self.length)
        if self.bits < 0 or self.bits >> self.length:
            raise ContractError(f"bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def from_str(cls, s: str) -> "BitRow":
        s = s.strip()
        if not s or set(s) - {"0", "1"}:
            raise ContractError(f"not a binary string: {s!r}")
        return cls(str_to_bits(s), len(s))

    @classmethod
    def zeros(cls, length: int) -> "BitRow":
        return cls(0, length)

    def __str__(self) -> str:
        return bits_to_str(self.bits, self.length)

    def __xor__(self, other: "BitRow") -> "BitRow":
        if other.length != self.length:
            raise ContractError("length mismatch")
        return BitRow(self.bits ^ other.bits, self.length)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> list[int]:
        return [j for j in range(self.length) if self.bits >> j & 1]


@dataclass(frozen=True)
class BitMatrix:
    """An ordered list of packed rows sharing ``ncols`` columns.

    Zero-row matrices are legal; they stand for the zero code (or, as a check
    matrix, for the full space).
    """

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        _check_len(self.ncols)
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ContractError(f"row {r:#x} does not fit in {self.ncols} columns")

    @classmethod
    def from_strs(cls, rows: Sequence[str], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            if not rows:
                raise ContractError("ncols required for an empty matrix")
            ncols = len(rows[0].strip())
        parsed = [BitRow.from_str(r) for r in rows]
        if any(r.length != ncols for r in parsed):
            raise ContractError("rows differ in length")
        return cls(tuple(r.bits for r in parsed), ncols)

    @classmethod
    def from_bitrows(cls, rows: Iterable[BitRow], ncols: int) -> "BitMatrix":
        rows = list(rows)
        if any(r.length != ncols for r in rows):
            raise ContractError("rows differ in length")
        return cls(tuple(r.bits for r in rows), ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> BitRow:
        return BitRow(self.rows[i], self.ncols)

    def to_strs(self) -> list[str]:
        return [bits_to_str(r, self.ncols) for r in self.rows]

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.uint64)

    def rank(self) -> int:
        return len(rref(self)[1])


def str_to_bits(s: str) -> int:
    return int(s[::-1], 2)


def bits_to_str(bits: int, n: int) -> str:
    return format(bits, f"0{n}b")[::-1]


def weight(v: BitRow) -> int:
    return v.bits.bit_count()


def _rref_ints(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    work = list(rows)
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        mask = 1 << col
        piv = next((i for i in range(r, len(work)) if work[i] & mask), None)
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(len(work)):
            if i != r and work[i] & mask:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work, pivots


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row-echelon form and pivot columns.

    The result keeps ``m.nrows`` rows; zero rows from dependencies sink to
    the bottom.
    """
    work, pivots = _rref_ints(m.rows, m.ncols)
    return BitMatrix(tuple(work), m.ncols), pivots


def basis(rows: Sequence[int], ncols: int) -> list[int]:
    """Independent rows spanning the same space (RREF, zero rows dropped)."""
    work, pivots = _rref_ints(rows, ncols)
    return work[: len(pivots)]


def _parity_check_ints(rows: Sequence[int], n: int) -> list[int]:
    work, pivots = _rref_ints(rows, n)
    pivot_rows = list(zip(pivots, work))
    pivot_set = set(pivots)
    checks = []
    for f in range(n):
        if f in pivot_set:
            continue
        h = 1 << f
        for p, row in pivot_rows:
            if row >> f & 1:
                h |= 1 << p
        checks.append(h)
    return checks


def parity_check(generators: BitMatrix) -> BitMatrix:
    """An ``(n - k) x n`` check matrix with ``G H^T = 0`` and full rank."""
    return BitMatrix(tuple(_parity_check_ints(generators.rows, generators.ncols)), generators.ncols)


def _syndrome_int(v: int, checks: Sequence[int]) -> int:
    s = 0
    for i, h in enumerate(checks):
        s |= ((v & h).bit_count() & 1) << i
    return s


def syndrome(v: BitRow, h: BitMatrix) -> BitRow | None:
    """``v H^T`` as a row of length ``h.nrows``.

    A check matrix with no rows (the dual of the full space) has an empty
    syndrome; ``None`` is returned for it.
    """
    if v.length != h.ncols:
        raise ContractError(f"vector length {v.length} != check matrix width {h.ncols}")
    if h.nrows == 0:
        return None
    return BitRow(_syndrome_int(v.bits, h.rows), h.nrows)


def _combinations_ints(n: int, w: int) -> Iterator[int]:
    # Gosper's hack: increasing integers of popcount w, i.e. colex by support.
    if w == 0:
        yield 0
        return
    x = (1 << w) - 1
    limit = 1 << n
    while x < limit:
        yield x
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


def weight_combinations(length: int, w: int) -> Iterator[BitRow]:
    """All vectors of weight exactly ``w``, colexicographic by support.

    Colex order on supports is the increasing order of the packed integers,
    e.g. for length 4 and weight 2: 1100, 1010, 0110, 1001, 0101, 0011.
    """
    _check_len(length)
    if not 0 <= w <= length:
        raise ContractError(f"weight {w} outside [0, {length}]")
    for bits in _combinations_ints(length, w):
        yield BitRow(bits, length)


def is_column_triangularizable(k: BitMatrix) -> bool:
    """True iff some column permutation makes ``k`` upper-triangular.

    For an invertible square matrix this holds exactly when the rows
    ``i..l-1`` together touch ``l - i`` columns for every ``i``.
    """
    n = k.ncols
    if k.nrows != n:
        raise ContractError("matrix must be square")
    union = 0
    for i in range(n - 1, -1, -1):
        union |= k.rows[i]
        if union.bit_count() != n - i:
            return False
    return True
