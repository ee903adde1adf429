"""Candidate partial-distance profiles.

Profiles are enumerated nondecreasing, capped entrywise by a table of
minimum-distance upper bounds ``d[n, k]`` (entry ``phi`` is capped by
``d[l, l - phi]``), and filtered by two necessary conditions on kernel
profiles plus a target rate of polarization.
"""

from __future__ import annotations

import csv
import itertools
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .codes import Pdp, rate_of_polarization


class TableFormatError(ValueError):
    pass


@dataclass(frozen=True)
class DistanceTable:
    """Upper bounds on the minimum distance of binary ``(n, k)`` linear codes.

    Missing entries fall back to the Singleton bound ``n - k + 1``, so a
    partial table only ever loosens filtering.
    """

    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    provenance: str = "singleton"

    def __post_init__(self) -> None:
        for (n, k), d in self.entries.items():
            if not 1 <= k <= n:
                raise TableFormatError(f"bad code parameters ({n}, {k})")
            if not 1 <= d <= n - k + 1:
                raise TableFormatError(f"d[{n},{k}] = {d} violates 1 <= d <= n - k + 1")
        by_n: dict[int, list[tuple[int, int]]] = {}
        for (n, k), d in self.entries.items():
            by_n.setdefault(n, []).append((k, d))
        for n, kd in by_n.items():
            kd.sort()
            for (k0, d0), (k1, d1) in itertools.pairwise(kd):
                if d1 > d0:
                    raise TableFormatError(f"d[{n},k] increases from k={k0} to k={k1}")

    def bound(self, n: int, k: int) -> int:
        return self.entries.get((n, k), n - k + 1)

    @classmethod
    def from_csv(cls, path: str | Path) -> "DistanceTable":
        """Read ``n,k,d`` rows; lines starting with ``#`` are comments."""
        path = Path(path)
        lines = [
            ln for ln in path.read_text(encoding="utf-8").splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")
        ]
        reader = csv.DictReader(lines)
        if reader.fieldnames is None or [f.strip() for f in reader.fieldnames] != ["n", "k", "d"]:
            raise TableFormatError(f"{path}: header must be 'n,k,d'")
        entries = {}
        for lineno, row in enumerate(reader, start=2):
            try:
                n, k, d = (int(row[f].strip()) for f in reader.fieldnames)
            except (TypeError, ValueError, AttributeError) as exc:
                raise TableFormatError(f"{path}: bad row {lineno}: {row}") from exc
            entries[(n, k)] = d
        return cls(entries, provenance=str(path))

    @classmethod
    def griesmer(cls, max_n: int) -> "DistanceTable":
        """Largest ``d`` with ``sum_{i<k} ceil(d / 2**i) <= n``; a true upper bound."""
        entries = {}
        for n in range(1, max_n + 1):
            for k in range(1, n + 1):
                d = n - k + 1
                while sum(-(-d // (1 << i)) for i in range(k)) > n:
                    d -= 1
                entries[(n, k)] = d
        return cls(entries, provenance="griesmer")


@dataclass(frozen=True)
class PdpQuery:
    size: int
    e_min: float = 0.0
    table: DistanceTable = field(default_factory=DistanceTable)
    enforce_lemma4: bool = True
    enforce_lemma5: bool = True

    def __post_init__(self) -> None:
        if self.size < 2:
            raise ValueError("profile size must be at least 2")
        if not 0 <= self.e_min < 1:
            raise ValueError("e_min must lie in [0, 1)")


def check_lemma4(d: Sequence[int]) -> bool:
    """If the second entry is 2, every entry from index 1 on must be even."""
    if len(d) < 2 or d[1] != 2:
        return True
    return all(x % 2 == 0 for x in d[1:])


def check_lemma5(d: Sequence[int]) -> bool:
    """``sum_{j>=i} 2**(l-j) * d[j] <= 2**(l-i) * l`` for every ``i``."""
    n = len(d)
    tail = 0
    for i in range(n - 1, -1, -1):
        tail += d[i] << (n - i)
        if tail > n << (n - i):
            return False
    return True


def _lemma5_prefix_ok(prefix: Sequence[int], n: int) -> bool:
    # Unknown tail entries are at least the last prefix value.
    last = prefix[-1]
    m = len(prefix)
    tail = 0
    for i in range(n - 1, -1, -1):
        tail += (prefix[i] if i < m else last) << (n - i)
        if tail > n << (n - i):
            return False
    return True


def entry_bounds(n: int, table: DistanceTable) -> list[int]:
    """Per-index caps for nondecreasing profiles: ``min_{j >= phi} d[n, n - j]``."""
    raw = [table.bound(n, n - phi) for phi in range(n)]
    caps = raw[:]
    for phi in range(n - 2, -1, -1):
        caps[phi] = min(caps[phi], caps[phi + 1])
    return caps


def enumerate_pdps(q: PdpQuery) -> Iterator[Pdp]:
    """Yield every admissible nondecreasing profile in lexicographic order."""
    n = q.size
    caps = entry_bounds(n, q.table)
    log_caps = [math.log(c) for c in caps]
    opt_tail = [0.0] * (n + 1)
    for phi in range(n - 1, -1, -1):
        opt_tail[phi] = opt_tail[phi + 1] + log_caps[phi]
    # Final check is exact; the slack only keeps float noise from pruning a
    # borderline branch.
    need = q.e_min * n * math.log(n) - 1e-12

    prefix: list[int] = []

    def extend(phi: int, log_sum: float) -> Iterator[Pdp]:
        if phi == n:
            d = tuple(prefix)
            if rate_of_polarization(d) > q.e_min:
                yield d
            return
        lo = prefix[-1] if prefix else 1
        even_only = q.enforce_lemma4 and phi >= 2 and prefix[1] == 2
        for x in range(lo, caps[phi] + 1):
            if even_only and x % 2:
                continue
            s = log_sum + math.log(x)
            if s + opt_tail[phi + 1] <= need:
                continue
            prefix.append(x)
            if not q.enforce_lemma5 or _lemma5_prefix_ok(prefix, n):
                yield from extend(phi + 1, s)
                prefix.pop()
            else:
                prefix.pop()
                # Larger x only increases every tail sum.
                break

    yield from extend(0, 0.0)


def _multiset_permutations(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    a = sorted(items)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def permute_pdp(d: Sequence[int], strategy: str | Iterable[Sequence[int]] = "all") -> Iterator[Pdp]:
    """Distinct rearrangements of ``d``, the identity first.

    ``strategy="all"`` walks every distinct multiset permutation in
    lexicographic order.  Otherwise ``strategy`` is an iterable of index
    orders; order ``p`` yields ``(d[p[0]], d[p[1]], ...)``.
    """
    d = tuple(d)
    seen = {d}
    yield d
    if isinstance(strategy, str):
        if strategy != "all":
            raise ValueError(f"unknown permutation strategy {strategy!r}")
        candidates: Iterable[tuple[int, ...]] = _multiset_permutations(d)
    else:
        def from_orders() -> Iterator[tuple[int, ...]]:
            for order in strategy:
                order = list(order)
                if sorted(order) != list(range(len(d))):
                    raise ValueError(f"not a permutation of range({len(d)}): {order}")
                yield tuple(d[i] for i in order)

        candidates = from_orders()
    for p in candidates:
        if p not in seen:
            seen.add(p)
            yield p
