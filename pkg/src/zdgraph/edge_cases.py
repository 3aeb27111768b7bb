"""Registry of known, documented exceptions to the generic predictions.

Some predictions are stated for rings with at least three factors and fail
in specific, well-understood ways on two-factor rings.  Violations that
match an entry here are reported as registered; anything else that fails is
an unregistered violation and makes verification exit nonzero.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import InputFormatError
from .rings import Ring

REGISTRY_FORMAT = 1


@dataclass(frozen=True)
class RegistryEntry:
    check_id: str
    k: int | None
    has_factor_2: bool | None
    reason: str

    def matches(self, check_id: str, ring: Ring) -> bool:
        if check_id != self.check_id:
            return False
        if self.k is not None and ring.k != self.k:
            return False
        if self.has_factor_2 is not None and (2 in ring.qs) != self.has_factor_2:
            return False
        return True


@dataclass(frozen=True)
class Registry:
    entries: tuple[RegistryEntry, ...]

    def lookup(self, check_id: str, ring: Ring) -> RegistryEntry | None:
        for entry in self.entries:
            if entry.matches(check_id, ring):
                return entry
        return None


def _parse_registry(obj: object) -> Registry:
    if not isinstance(obj, dict) or not isinstance(obj.get("entries"), list):
        raise InputFormatError("registry file must be an object with an 'entries' list")
    if obj.get("format") != REGISTRY_FORMAT:
        raise InputFormatError(
            f"unsupported registry format {obj.get('format')!r}; expected {REGISTRY_FORMAT}"
        )
    entries = []
    for raw in obj["entries"]:
        if not isinstance(raw, dict) or "check_id" not in raw or "reason" not in raw:
            raise InputFormatError("each registry entry needs 'check_id' and 'reason'")
        applies = raw.get("applies", {})
        if not isinstance(applies, dict):
            raise InputFormatError("'applies' must be an object")
        k = applies.get("k")
        has2 = applies.get("has_factor_2")
        if k is not None and not isinstance(k, int):
            raise InputFormatError("'applies.k' must be an integer")
        if has2 is not None and not isinstance(has2, bool):
            raise InputFormatError("'applies.has_factor_2' must be a boolean")
        entries.append(
            RegistryEntry(
                check_id=str(raw["check_id"]),
                k=k,
                has_factor_2=has2,
                reason=str(raw["reason"]),
            )
        )
    return Registry(tuple(entries))


def load_registry(path: str | Path | None = None) -> Registry:
    if path is not None:
        text = Path(path).read_text(encoding="utf-8")
    else:
        text = resources.files("zdgraph.data").joinpath("registered_edge_cases.json").read_text(
            encoding="utf-8"
        )
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"registry is not valid JSON: {exc}") from exc
    return _parse_registry(obj)
