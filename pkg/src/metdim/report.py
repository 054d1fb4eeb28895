"""JSON report envelope shared by every CLI command."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

SCHEMA_VERSION = 1


@dataclass
class Report:
    command: dict
    payload: dict
    provenance: list[str] = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION
    timestamp: str | None = None

    def to_dict(self) -> dict:
        out = {
            "schema_version": self.schema_version,
            "command": self.command,
            "payload": self.payload,
            "provenance": self.provenance,
        }
        if self.timestamp is not None:
            out["timestamp"] = self.timestamp
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        if "schema_version" not in d:
            raise ValueError("report without schema_version")
        return cls(d["command"], d["payload"], list(d.get("provenance", [])),
                   d["schema_version"], d.get("timestamp"))

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def stamp(self) -> "Report":
        self.timestamp = datetime.now(timezone.utc).replace(microsecond=0).isoformat()
        return self
