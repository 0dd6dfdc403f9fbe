"""Check results and report rendering (text and machine-readable)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckResult:
    """Outcome of one named check.

    ``target`` is a ring-spec-style description of what was checked, so a
    machine report carries everything needed to re-verify offline.
    """

    name: str
    passed: bool
    verdict: object = None
    certificates: list = field(default_factory=list)  # {"target": doc, "certificate": dict}
    examined: int = 0
    duration_ms: float = 0.0
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "verdict": bool(self.passed),
            "witness": [c["certificate"].get("witness", {}) for c in self.certificates],
            "certificates": self.certificates,
            "examined": self.examined,
            "duration_ms": round(self.duration_ms, 3),
            "detail": self.detail,
        }


@dataclass
class Report:
    title: str
    results: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def to_machine(self, include_durations: bool = True) -> str:
        entries = []
        for r in self.results:
            d = r.to_dict()
            if not include_durations:
                d.pop("duration_ms")
            entries.append(d)
        doc = {"report": self.title, "ok": self.ok, "checks": entries}
        return json.dumps(doc, sort_keys=True, indent=1)

    def to_text(self) -> str:
        lines = [f"== {self.title} =="]
        for r in self.results:
            status = "pass" if r.passed else "FAIL"
            extra = f"  [{r.detail}]" if r.detail else ""
            lines.append(f"{status:4}  {r.name:<42} examined={r.examined:<9} "
                         f"{r.duration_ms:8.1f} ms{extra}")
        lines.append(f"{'OK' if self.ok else 'FAILED'}: "
                     f"{sum(r.passed for r in self.results)}/{len(self.results)} checks passed")
        return "\n".join(lines)
