"""Pass/fail bookkeeping shared by the verification harnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

MAX_EXAMPLES = 5


@dataclass
class Check:
    """Outcome of one named property over many instances."""

    name: str
    total: int = 0
    failed: int = 0
    examples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {"name": self.name, "total": self.total, "failed": self.failed, "examples": self.examples}


@dataclass
class Report:
    title: str
    checks: dict[str, Check] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def record(self, name: str, ok: bool, detail: str = "") -> bool:
        c = self.checks.setdefault(name, Check(name))
        c.total += 1
        if not ok:
            c.failed += 1
            if len(c.examples) < MAX_EXAMPLES:
                c.examples.append(detail)
        return ok

    def merge(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks.values():
            mine = self.checks.setdefault(prefix + c.name, Check(prefix + c.name))
            mine.total += c.total
            mine.failed += c.failed
            mine.examples.extend(c.examples[: MAX_EXAMPLES - len(mine.examples)])
        self.notes.extend(other.notes)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks.values())

    def failures(self) -> list[Check]:
        return [c for c in self.checks.values() if not c.ok]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks.values()],
            "notes": self.notes,
        }

    def render(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks.values():
            status = "ok" if c.ok else "FAIL"
            lines.append(f"  {status:4} {c.name} ({c.total - c.failed}/{c.total})")
            for ex in c.examples:
                lines.append(f"       e.g. {ex}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)
