"""Depth-first search for kernels with a prescribed partial-distance profile.

Rows are fixed from the bottom (phase ``l-1``) up to phase 0.  At phase
``phi`` the candidates are all vectors of weight exactly ``D[phi]`` in colex
order; a candidate is kept when its distance to the span of the rows below
equals ``D[phi]``.  Two optional filters shrink the tree:

* syndrome pruning skips a candidate whose coset (under the check matrix of
  the rows below) was already evaluated at this node;
* distribution pruning skips an accepted candidate whose coset weight
  distribution was already seen at this phase.  This is a heuristic and can
  lose kernels.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields

from .codes import Kernel, KernelCode, Pdp, _direct, _dual, use_direct, verify_kernel
from .gf2 import BitRow, _combinations_ints, _syndrome_int

log = logging.getLogger(__name__)

BUDGET_CHECK_INTERVAL = 1 << 12


@dataclass(frozen=True)
class SearchConfig:
    pdp: Pdp
    max_kernels: int | None = 1
    time_budget: float | None = None
    enable_syndrome_prune: bool = True
    enable_distribution_prune: bool = True
    # Keep one distribution set per phase for the whole run instead of one
    # per visit of that phase.
    global_distributions: bool = False
    threshold: int | None = None
    threads: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "pdp", tuple(int(x) for x in self.pdp))
        n = len(self.pdp)
        if not 1 <= n <= 64:
            raise ValueError(f"kernel size must be in [1, 64], got {n}")
        if any(not 1 <= x <= n for x in self.pdp):
            raise ValueError(f"profile entries must lie in [1, {n}]")
        if self.max_kernels is not None and self.max_kernels < 1:
            raise ValueError("max_kernels must be positive")
        if self.threads < 1:
            raise ValueError("threads must be positive")
        if self.threads > 1 and self.global_distributions:
            raise ValueError("global distribution sets cannot be split across workers")

    @property
    def size(self) -> int:
        return len(self.pdp)


@dataclass
class SearchStats:
    nodes: int = 0
    candidates: int = 0
    cosets_evaluated: int = 0
    syndrome_prunes: int = 0
    distribution_prunes: int = 0
    elapsed: float = 0.0

    def merge(self, other: "SearchStats") -> None:
        for f in fields(self):
            if f.name != "elapsed":
                setattr(self, f.name, getattr(self, f.name) + getattr(other, f.name))


@dataclass
class SearchOutcome:
    kernels: list[Kernel]
    exhausted: bool
    budget_expired: bool = False
    stats: SearchStats = field(default_factory=SearchStats)


def check_candidate(
    v: BitRow | int, suffix: KernelCode, target: int, threshold: int | None = None
):
    """Accept ``v`` iff its distance to ``suffix`` is exactly ``target``.

    Returns ``(accept, distribution)``; the distribution is ``None`` when the
    direct walk aborted on a word lighter than ``target``.
    """
    bits = v.bits if isinstance(v, BitRow) else int(v)
    if use_direct(suffix, threshold):
        d, dist = _direct(bits, suffix, target)
    else:
        d, dist = _dual(bits, suffix)
    return d == target, dist


class _Stop(Exception):
    pass


class _Searcher:
    def __init__(self, cfg: SearchConfig, deadline: float | None):
        self.cfg = cfg
        self.n = cfg.size
        self.rows = [0] * self.n
        self.kernels: list[Kernel] = []
        self.stats = SearchStats()
        self.deadline = deadline
        self.expired = False
        self.evaluations = 0
        self.global_w = [set() for _ in range(self.n)] if cfg.global_distributions else None

    def run(self, phase: int) -> bool:
        """Search from ``phase`` down; returns True when the subtree was exhausted."""
        try:
            self.descend(phase)
        except _Stop:
            return False
        return True

    def candidates(self, phi: int, code: KernelCode):
        """Yield ``(v, dist)`` for accepted candidates at ``phi``, applying both filters."""
        cfg, st = self.cfg, self.stats
        target = cfg.pdp[phi]
        checks = code.checks
        seen_s: set[int] = set()
        if self.global_w is not None:
            seen_w = self.global_w[phi]
        else:
            seen_w = set()
        for v in _combinations_ints(self.n, target):
            st.candidates += 1
            if cfg.enable_syndrome_prune:
                s = _syndrome_int(v, checks)
                if s in seen_s:
                    st.syndrome_prunes += 1
                    continue
                seen_s.add(s)
            self.evaluations += 1
            if (
                self.deadline is not None
                and self.evaluations % BUDGET_CHECK_INTERVAL == 0
                and time.monotonic() > self.deadline
            ):
                self.expired = True
                raise _Stop
            st.cosets_evaluated += 1
            accept, dist = check_candidate(v, code, target, cfg.threshold)
            if not accept:
                continue
            if cfg.enable_distribution_prune:
                if dist in seen_w:
                    st.distribution_prunes += 1
                    continue
                seen_w.add(dist)
            yield v, dist

    def descend(self, phi: int) -> None:
        self.stats.nodes += 1
        if phi < 0:
            self.kernels.append(Kernel(tuple(self.rows)))
            if self.cfg.max_kernels is not None and len(self.kernels) >= self.cfg.max_kernels:
                raise _Stop
            return
        code = KernelCode(tuple(self.rows[phi + 1:]), self.n, phi + 1)
        for v, _ in self.candidates(phi, code):
            self.rows[phi] = v
            self.descend(phi - 1)
        self.rows[phi] = 0


def _run_branch(cfg: SearchConfig, top_row: int, deadline: float | None):
    s = _Searcher(cfg, deadline)
    s.rows[-1] = top_row
    exhausted = s.run(cfg.size - 2)
    return s.kernels, exhausted, s.expired, s.stats


def _check_results(cfg: SearchConfig, kernels: list[Kernel]) -> None:
    for k in kernels:
        got = verify_kernel(k)
        if got != cfg.pdp:
            raise RuntimeError(f"search produced a kernel with profile {got}, wanted {cfg.pdp}")


def kernel_search(cfg: SearchConfig, verify: bool = True) -> SearchOutcome:
    """Run the search described by ``cfg``.

    Stops after ``cfg.max_kernels`` kernels, when the time budget runs out,
    or when the tree is exhausted.  Every returned kernel is re-verified
    independently unless ``verify`` is false.
    """
    t0 = time.monotonic()
    deadline = None if cfg.time_budget is None else t0 + cfg.time_budget
    if cfg.threads > 1 and cfg.size > 1:
        out = _parallel_search(cfg, deadline)
    else:
        s = _Searcher(cfg, deadline)
        exhausted = s.run(cfg.size - 1)
        out = SearchOutcome(s.kernels, exhausted, s.expired, s.stats)
    out.stats.elapsed = time.monotonic() - t0
    if verify:
        _check_results(cfg, out.kernels)
    log.info(
        "search %s: %d kernel(s), exhausted=%s, nodes=%d, %.3fs",
        ",".join(map(str, cfg.pdp)), len(out.kernels), out.exhausted,
        out.stats.nodes, out.stats.elapsed,
    )
    return out


def _parallel_search(cfg: SearchConfig, deadline: float | None) -> SearchOutcome:
    # Top-phase filtering is done here so branches see the same candidate
    # stream as the serial search; each branch then owns fresh state.
    root = _Searcher(cfg, deadline)
    root.stats.nodes += 1
    n = cfg.size
    try:
        tops = [v for v, _ in root.candidates(n - 1, KernelCode((), n, n))]
    except _Stop:
        return SearchOutcome([], False, True, root.stats)
    stats = root.stats
    kernels: list[Kernel] = []
    exhausted, expired = True, False
    with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
        results = pool.map(_run_branch, [cfg] * len(tops), tops, [deadline] * len(tops))
        for ks, ex, exp, st in results:
            stats.merge(st)
            kernels.extend(ks)
            exhausted &= ex
            expired |= exp
    if cfg.max_kernels is not None and len(kernels) >= cfg.max_kernels:
        # Same verdict the serial search reports when it stops on the cap.
        kernels = kernels[: cfg.max_kernels]
        exhausted = False
    return SearchOutcome(kernels, exhausted, expired, stats)
