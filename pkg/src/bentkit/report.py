"""Deterministic run reports.

The body (command, field, parameters, verdicts, spectrum digests) is
serialized with sorted keys and hashed; wall time is kept outside the body so
two runs with identical inputs produce byte-identical bodies and digests.
"""

from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field as dc_field

import numpy as np

SCHEMA_VERSION = 1


def _plain(obj):
    """Convert numpy scalars and arrays into JSON-native values."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return _plain(obj.tolist())
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    return obj


def canonical_json(obj) -> str:
    return json.dumps(_plain(obj), sort_keys=True, separators=(",", ":"))


@dataclass
class RunReport:
    command: list
    field: dict | None = None
    params: dict = dc_field(default_factory=dict)
    verdicts: list = dc_field(default_factory=list)
    digests: dict = dc_field(default_factory=dict)
    ok: bool = True
    started: float = dc_field(default_factory=time.perf_counter)

    def add(self, verdict: dict, ok: bool = True) -> None:
        self.verdicts.append(verdict)
        self.ok = self.ok and bool(ok)

    def body(self) -> dict:
        return _plain({
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "field": self.field,
            "params": self.params,
            "verdicts": self.verdicts,
            "digests": self.digests,
            "ok": self.ok,
        })

    def digest(self) -> str:
        return hashlib.sha256(canonical_json(self.body()).encode()).hexdigest()

    def to_json(self) -> dict:
        return {
            "report": self.body(),
            "report_digest": self.digest(),
            "wall_time_s": round(time.perf_counter() - self.started, 3),
        }

    def dumps(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json(), sort_keys=True, indent=indent)
