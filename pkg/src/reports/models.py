"""Pydantic schemas for command reports.

Kept as a single module because every command emits the same envelope; only
the list of checks differs.
"""

from __future__ import annotations

from typing import Any, List, Literal, Optional

from pydantic import BaseModel, Field

from src import __version__

CheckVerdict = Literal["pass", "fail", "info"]


class CheckResult(BaseModel):
    name: str
    verdict: CheckVerdict
    # Anything JSON-serialisable: formatted vectors, norm values, tables.
    witness: Optional[Any] = None
    # The result the check leans on, in one sentence.
    basis: Optional[str] = None


class Report(BaseModel):
    tool_version: str = __version__
    command: str
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.verdict != "fail" for c in self.checks)

    def add(
        self,
        name: str,
        verdict: CheckVerdict,
        witness: Any = None,
        basis: Optional[str] = None,
    ) -> CheckResult:
        check = CheckResult(name=name, verdict=verdict, witness=witness, basis=basis)
        self.checks.append(check)
        return check

    def find(self, name: str) -> Optional[CheckResult]:
        return next((c for c in self.checks if c.name == name), None)
