"""Plain-text formats: kernel files and profile strings."""

from __future__ import annotations

from pathlib import Path

from .codes import Kernel, Pdp
from .gf2 import ContractError


class FormatError(ValueError):
    pass


def parse_kernel(text: str) -> Kernel:
    """``l`` lines of ``l`` characters from ``{0, 1}``; line ``i`` is row ``i``.

    Blank lines are ignored.
    """
    rows = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise FormatError("empty kernel file")
    n = len(rows)
    for i, r in enumerate(rows):
        if len(r) != n:
            raise FormatError(f"line {i + 1}: expected {n} characters, got {len(r)}")
        if set(r) - {"0", "1"}:
            raise FormatError(f"line {i + 1}: only 0 and 1 are allowed")
    try:
        return Kernel.from_strs(rows)
    except ContractError as exc:
        raise FormatError(str(exc)) from exc


def read_kernel(path: str | Path) -> Kernel:
    return parse_kernel(Path(path).read_text(encoding="utf-8"))


def format_kernel(k: Kernel) -> str:
    return "\n".join(k.to_strs()) + "\n"


def write_kernel(k: Kernel, path: str | Path) -> None:
    Path(path).write_text(format_kernel(k), encoding="utf-8")


def parse_pdp(s: str) -> Pdp:
    parts = [p.strip() for p in s.split(",")]
    try:
        d = tuple(int(p) for p in parts)
    except ValueError:
        raise FormatError(f"not a comma-separated list of integers: {s!r}") from None
    if any(x < 1 for x in d):
        raise FormatError(f"profile entries must be positive: {s!r}")
    return d


def format_pdp(d: Pdp) -> str:
    return ",".join(str(x) for x in d)
