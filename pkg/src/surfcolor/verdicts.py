"""Outcome record shared by the checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
VACUOUS = "vacuous"
EXCEPTION = "exception"
VIOLATION = "violation"
HYPOTHESIS_FAILURE = "hypothesis-failure"

_OK = {PASS, VACUOUS, EXCEPTION}


@dataclass(frozen=True)
class Verdict:
    """Result of a checker.

    ``kind`` names the check, ``measured`` and ``bound`` carry the compared
    quantities and ``witness`` whatever object reproduces the outcome.
    """

    status: str
    kind: str = ""
    measured: Any = None
    bound: Any = None
    witness: Any = None
    detail: str = ""
    extra: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status in _OK

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        parts = [self.status]
        if self.kind:
            parts.append(f"kind={self.kind}")
        if self.measured is not None:
            parts.append(f"measured={self.measured}")
        if self.bound is not None:
            parts.append(f"bound={self.bound}")
        if self.detail:
            parts.append(self.detail)
        return " ".join(parts)
