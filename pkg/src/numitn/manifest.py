"""Dataset manifest records and their JSONL serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Iterable, Iterator, Optional

from .evaluate import literal_present
from .types import ExpressionType

_FIELD_ORDER = ("id", "locale", "type", "verbalized", "formatted",
                "expressions", "audio", "voice")
_TYPE_VALUES = {t.value for t in ExpressionType}


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class ManifestRecord:
    """One corpus sentence pair plus its synthesis bookkeeping.

    The spoken side must be digit-free and every expression surface must
    occur in the formatted side; both are enforced on construction so a
    manifest on disk can be trusted after a plain read.
    """

    id: str
    locale: str
    type: str
    verbalized: str
    formatted: str
    expressions: tuple[tuple[str, str], ...]
    audio: Optional[str] = None
    voice: Optional[str] = None

    def __post_init__(self) -> None:
        if self.type not in _TYPE_VALUES:
            raise ManifestError(f"record {self.id}: unknown type {self.type!r}")
        if any(ch.isdigit() for ch in self.verbalized):
            raise ManifestError(
                f"record {self.id}: verbalized text contains digits: {self.verbalized!r}")
        if not self.expressions:
            raise ManifestError(f"record {self.id}: no expressions listed")
        for surface, expr_type in self.expressions:
            if expr_type not in _TYPE_VALUES:
                raise ManifestError(
                    f"record {self.id}: unknown expression type {expr_type!r}")
            if not literal_present(self.formatted, surface):
                raise ManifestError(
                    f"record {self.id}: expression {surface!r} missing from "
                    f"formatted text {self.formatted!r}")

    def surfaces(self) -> tuple[str, ...]:
        return tuple(surface for surface, _ in self.expressions)

    def to_json(self) -> str:
        payload = {name: getattr(self, name) for name in _FIELD_ORDER}
        payload["expressions"] = [list(pair) for pair in self.expressions]
        return json.dumps(payload, ensure_ascii=False)

    @classmethod
    def from_obj(cls, obj: object) -> "ManifestRecord":
        if not isinstance(obj, dict):
            raise ManifestError(f"expected an object, got {type(obj).__name__}")
        known = {f.name for f in fields(cls)}
        extra = set(obj) - known
        if extra:
            raise ManifestError(f"unknown fields: {sorted(extra)}")
        missing = [name for name in _FIELD_ORDER[:6] if name not in obj]
        if missing:
            raise ManifestError(f"missing fields: {missing}")
        data = dict(obj)
        raw = data["expressions"]
        if not isinstance(raw, list) or any(len(pair) != 2 for pair in raw):
            raise ManifestError("expressions must be [surface, type] pairs")
        data["expressions"] = tuple((str(s), str(t)) for s, t in raw)
        return cls(**data)


def write_manifest(records: Iterable[ManifestRecord], path: str | Path) -> int:
    return _write(records, path, "w")


def append_manifest(records: Iterable[ManifestRecord], path: str | Path) -> int:
    return _write(records, path, "a")


def _write(records: Iterable[ManifestRecord], path: str | Path, mode: str) -> int:
    count = 0
    with open(path, mode, encoding="utf-8") as handle:
        for record in records:
            handle.write(record.to_json() + "\n")
            count += 1
    return count


def iter_manifest(path: str | Path) -> Iterator[ManifestRecord]:
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as err:
                raise ManifestError(f"{path}:{line_no}: invalid JSON: {err}") from err
            try:
                yield ManifestRecord.from_obj(obj)
            except ManifestError as err:
                raise ManifestError(f"{path}:{line_no}: {err}") from err


def read_manifest(path: str | Path) -> list[ManifestRecord]:
    return list(iter_manifest(path))
