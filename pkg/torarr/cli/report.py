"""
Structured command reports, rendered as JSON or as console text.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

SCHEMA_VERSION = 1


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    """
    Output of one command. Identical inputs and flags give identical
    reports unless timing is requested.
    """
    command: str
    input_digest: str
    results: Dict[str, Any] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    timing_ms: Optional[float] = None

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def to_dict(self) -> dict:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "input_digest": self.input_digest,
            "results": self.results,
        }
        if self.checks:
            doc["checks"] = [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ]
            doc["ok"] = self.ok
        if self.timing_ms is not None:
            doc["timing_ms"] = round(self.timing_ms, 3)
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = ["=" * 60, f"{self.command}", "=" * 60]
        for key, value in self.results.items():
            lines.extend(_text_block(key, value))
        if self.checks:
            lines.append("")
            for c in self.checks:
                mark = "✅ PASS" if c.passed else "❌ FAIL"
                lines.append(f"{mark}  {c.name}" + (f"  ({c.detail})" if c.detail else ""))
        if self.timing_ms is not None:
            lines.append(f"\nelapsed: {self.timing_ms:.1f} ms")
        lines.append("=" * 60)
        return "\n".join(lines)

    def render(self, fmt: str = "text") -> str:
        return self.to_json() if fmt == "json" else self.to_text()


def _text_block(key: str, value: Any, indent: str = "") -> List[str]:
    if isinstance(value, dict):
        out = [f"{indent}{key}:"]
        for k, v in value.items():
            out.extend(_text_block(str(k), v, indent + "  "))
        return out
    if isinstance(value, list) and value and isinstance(value[0], dict):
        out = [f"{indent}{key}:"]
        for item in value:
            out.append(f"{indent}  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        return out
    return [f"{indent}{key}: {value}"]
