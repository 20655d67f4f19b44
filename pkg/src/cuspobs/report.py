"""Serializable reports produced by ``check`` and ``search``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone

from . import __version__
from .lattice import Finding
from .obstruction import FAIL, GenusFeasibility, Verdict, summarize


@dataclass
class ConfigurationReport:
    cusps: list[dict]
    g: int
    genus_feasibility: GenusFeasibility
    verdicts: list[Verdict]
    summary: str = ""

    def __post_init__(self):
        if not self.summary:
            self.summary = summarize(self.verdicts)

    def to_dict(self) -> dict:
        return {
            "cusps": self.cusps,
            "g": self.g,
            "genus_feasibility": self.genus_feasibility.to_dict(),
            "verdicts": [v.to_dict() for v in self.verdicts],
            "summary": self.summary,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ConfigurationReport":
        return cls(cusps=data["cusps"], g=data["g"],
                   genus_feasibility=GenusFeasibility.from_dict(data["genus_feasibility"]),
                   verdicts=[Verdict.from_dict(v) for v in data["verdicts"]],
                   summary=data["summary"])


@dataclass
class Report:
    command: str
    input: dict
    surface_findings: list[Finding]
    configurations: list[ConfigurationReport]
    extra: dict = field(default_factory=dict)
    tool_version: str = __version__
    generated_at: str | None = None

    @property
    def has_fail(self) -> bool:
        return any(v.status == FAIL for c in self.configurations for v in c.verdicts)

    @property
    def exit_code(self) -> int:
        return 1 if self.has_fail else 0

    def stamp(self, reproducible: bool) -> "Report":
        self.generated_at = None if reproducible else datetime.now(timezone.utc).isoformat()
        return self

    def to_dict(self) -> dict:
        out = {
            "tool_version": self.tool_version,
            "command": self.command,
            "input": self.input,
            "surface_findings": [f.to_dict() for f in self.surface_findings],
            "configurations": [c.to_dict() for c in self.configurations],
            "extra": self.extra,
        }
        if self.generated_at is not None:
            out["generated_at"] = self.generated_at
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(command=data["command"], input=data["input"],
                   surface_findings=[Finding.from_dict(f) for f in data["surface_findings"]],
                   configurations=[ConfigurationReport.from_dict(c) for c in data["configurations"]],
                   extra=data.get("extra", {}), tool_version=data["tool_version"],
                   generated_at=data.get("generated_at"))

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))
