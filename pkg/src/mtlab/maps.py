from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

MAP_KINDS = ("mt", "frame", "continuous", "boolean")


@dataclass(frozen=True)
class StructureMap:
    """Element-to-element (or point-to-point) table with its intended kind.

    ``proper`` is None until some check has decided it.
    """

    kind: str
    table: tuple[int, ...]
    proper: bool | None = None

    def __post_init__(self):
        if self.kind not in MAP_KINDS:
            raise ValueError(f"unknown map kind {self.kind!r}")
        object.__setattr__(self, "table", tuple(int(v) for v in self.table))

    def __call__(self, a: int) -> int:
        return self.table[a]

    def __len__(self) -> int:
        return len(self.table)

    def then(self, g: "StructureMap") -> "StructureMap":
        """``g . self``: apply ``self`` first."""
        return StructureMap(self.kind, tuple(g.table[v] for v in self.table))


def as_table(f: "StructureMap | Sequence[int]") -> tuple[int, ...]:
    if isinstance(f, StructureMap):
        return f.table
    return tuple(int(v) for v in f)


def identity_map(kind: str, n: int) -> StructureMap:
    return StructureMap(kind, tuple(range(n)))
