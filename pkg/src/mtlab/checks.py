from __future__ import annotations

from dataclasses import dataclass
from typing import Any


@dataclass(frozen=True)
class Check:
    """Outcome of a predicate: truth value, a counterexample, and which conjunct failed."""

    holds: bool
    witness: Any = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.holds

    @classmethod
    def ok(cls) -> "Check":
        return cls(True)

    @classmethod
    def fail(cls, reason: str, witness: Any = None) -> "Check":
        return cls(False, witness, reason)


def all_of(*named: tuple[str, Any]) -> Check:
    """Evaluate conjuncts lazily; report the first that fails.

    Each entry is ``(name, thunk)`` where ``thunk()`` returns a bool or Check.
    """
    for name, thunk in named:
        r = thunk()
        if isinstance(r, Check):
            if not r.holds:
                reason = f"{name}: {r.reason}" if r.reason else name
                return Check(False, r.witness, reason)
        elif not r:
            return Check(False, None, name)
    return Check(True)
