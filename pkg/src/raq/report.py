"""Tabular pass/fail reports emitted as TSV or JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, List, Sequence


@dataclass
class Report:
    title: str
    columns: Sequence[str]
    rows: List[Sequence[Any]] = field(default_factory=list)
    header: List[str] = field(default_factory=list)
    passed: bool = True

    def add(self, *row, ok: bool = True) -> None:
        self.rows.append(row)
        self.passed = self.passed and ok

    def to_tsv(self) -> str:
        lines = [f"# {self.title}"]
        lines += [f"# {h}" for h in self.header]
        lines.append("\t".join(self.columns))
        lines += ["\t".join(_cell(x) for x in row) for row in self.rows]
        lines.append("PASS" if self.passed else "FAIL")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "header": self.header,
            "columns": list(self.columns),
            "rows": [[_plain(x) for x in row] for row in self.rows],
            "status": "PASS" if self.passed else "FAIL",
        }

    def render(self, fmt: str) -> str:
        return json.dumps(self.to_json(), indent=2) if fmt == "json" else self.to_tsv()


def _plain(x):
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


def _cell(x) -> str:
    if isinstance(x, (list, tuple)):
        return ",".join(_cell(y) for y in x)
    if isinstance(x, bool):
        return "ok" if x else "MISMATCH"
    return str(x)
