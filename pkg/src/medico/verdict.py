from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Boolean answer plus an optional witness explaining a negative answer.

    Truthiness follows ``ok`` so a verdict can be used directly in ``if``.
    """

    ok: bool
    witness: Any = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


PASS = Verdict(True)
