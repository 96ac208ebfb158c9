from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import SizeGuardExceeded

DEFAULT_SIZE_GUARD = 20
ENV_SIZE_GUARD = "MTLAB_SIZE_GUARD"


@dataclass(frozen=True)
class Settings:
    size_guard: int = DEFAULT_SIZE_GUARD

    @classmethod
    def from_env(cls) -> "Settings":
        raw = os.environ.get(ENV_SIZE_GUARD)
        if raw is None or raw.strip() == "":
            return cls()
        return cls(size_guard=int(raw))


def size_guard(override: int | None = None) -> int:
    if override is not None:
        return override
    return Settings.from_env().size_guard


def require_within_guard(n: int, what: str, guard: int | None = None) -> None:
    """Refuse exponential scans over universes larger than the guard."""
    bound = size_guard(guard)
    if n > bound:
        raise SizeGuardExceeded(
            f"{what}: universe of size {n} exceeds size guard {bound} "
            f"(set {ENV_SIZE_GUARD} to raise it)",
            witness=n,
        )
