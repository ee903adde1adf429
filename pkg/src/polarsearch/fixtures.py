"""Reference kernels shipped with the package, with their expected profiles."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .codes import Kernel, Pdp
from .kernelio import parse_kernel, parse_pdp


@dataclass(frozen=True)
class Fixture:
    name: str
    table: str
    kernel: Kernel
    pdp: Pdp
    rate: float
    rate_text: str


class FixtureIntegrityError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def load_fixtures() -> tuple[Fixture, ...]:
    """Load every fixture, checking each file against its manifest checksum."""
    root = resources.files(__package__) / "fixtures"
    manifest = json.loads((root / "manifest.json").read_text(encoding="utf-8"))
    out = []
    for entry in manifest["kernels"]:
        text = (root / entry["file"]).read_text(encoding="utf-8")
        digest = hashlib.sha256(text.encode("utf-8")).hexdigest()
        if digest != entry["sha256"]:
            raise FixtureIntegrityError(f"{entry['file']}: checksum mismatch")
        kernel = parse_kernel(text)
        if kernel.size != entry["size"]:
            raise FixtureIntegrityError(f"{entry['file']}: expected size {entry['size']}")
        out.append(
            Fixture(
                name=entry["name"],
                table=entry["table"],
                kernel=kernel,
                pdp=parse_pdp(entry["pdp"]),
                rate=float(entry["rate"]),
                rate_text=entry["rate"],
            )
        )
    return tuple(out)


def get_fixture(name: str) -> Fixture:
    for f in load_fixtures():
        if f.name == name:
            return f
    raise KeyError(name)
