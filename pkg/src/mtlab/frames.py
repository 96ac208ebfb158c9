"""Finite frames: distributive lattices with way-below, points and frame-level predicates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from . import _subsets as sb
from .checks import Check, all_of
from .config import require_within_guard, size_guard
from .errors import NotDistributive, NotFrameHom, OracleDisagreement, ValidationError
from .maps import StructureMap, as_table
from .order import (
    FiniteLattice,
    complemented_elements,
    is_distributive,
    lattice_filters,
    pseudocomplement,
    scott_open_filter_flags,
)
from .spaces import FiniteSpace, validate_space

FRAME_PREDICATES = (
    "continuous",
    "stably_continuous",
    "compact",
    "regular",
    "zero_dim",
    "locally_stone",
    "stone",
    "spatial",
)


@dataclass(frozen=True, eq=False)
class Frame:
    lattice: FiniteLattice

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def elements(self) -> tuple[str, ...]:
        return self.lattice.elements

    @property
    def top(self) -> int:
        return self.lattice.top

    @property
    def bottom(self) -> int:
        return self.lattice.bottom

    def label(self, a: int) -> str:
        return self.lattice.elements[a]

    @cached_property
    def way_below(self) -> np.ndarray:
        return way_below(self)

    @cached_property
    def cmp(self) -> frozenset[int]:
        return complemented_elements(self.lattice)


def validate_frame(l: FiniteLattice) -> Frame:
    """A finite distributive lattice is a frame; anything else is rejected."""
    d = is_distributive(l)
    if not d:
        raise NotDistributive(f"distributive law fails at {d.witness}", witness=d.witness)
    return Frame(l)


def way_below_bruteforce(f: Frame, guard: int | None = None) -> np.ndarray:
    """``a << b`` iff every directed family whose join is above ``b`` has a member above ``a``."""
    l = f.lattice
    require_within_guard(l.size, "way-below oracle", guard)
    directed = sb.directed_masks(l.leq)
    masks = sb.all_masks(l.size)
    joins = sb.subset_table_fold(list(range(l.size)), l.join, l.bottom)
    rel = np.ones((l.size, l.size), dtype=bool)
    for a in range(l.size):
        above = sb.mask_of(l.up(a))
        escaping = np.unique(joins[directed & ~sb.hits(masks, above)])
        for j in escaping:
            # every b below the join of an escaping family fails
            rel[a, l.leq[:, j]] = False
    return rel


def way_below(f: Frame, guard: int | None = None) -> np.ndarray:
    """Way-below table.

    In a finite lattice every directed family contains its join, so ``<<``
    equals ``<=``.  Within the size guard the definitional oracle is run
    and must agree.
    """
    short = f.lattice.leq.copy()
    if f.size <= size_guard(guard):
        oracle = way_below_bruteforce(f, guard)
        if not np.array_equal(oracle, short):
            a, b = (int(v) for v in np.argwhere(oracle != short)[0])
            raise OracleDisagreement("way-below oracle disagrees with <=", witness=(f.label(a), f.label(b)))
    short.setflags(write=False)
    return short


def _approximated(f: Frame, rel: np.ndarray, what: str) -> Check:
    l = f.lattice
    for a in range(l.size):
        j = l.join_all(x for x in range(l.size) if rel[x, a])
        if j != a:
            return Check.fail(f"not the join of its {what}", f.label(a))
    return Check.ok()


def well_inside(f: Frame) -> np.ndarray:
    """``b`` well inside ``a``: ``b* v a = 1``."""
    l = f.lattice
    star = np.array([pseudocomplement(l, b) for b in range(l.size)], dtype=np.int64)
    return l.join[star[:, None], np.arange(l.size)[None, :]] == l.top


def _stable(f: Frame) -> Check:
    wb = f.way_below
    l = f.lattice
    for a in range(l.size):
        ups = np.flatnonzero(wb[a])
        for b in ups:
            for c in ups:
                if not wb[a, l.meet[b, c]]:
                    return Check.fail("way-below is not stable", (f.label(a), f.label(int(b)), f.label(int(c))))
    return Check.ok()


def _zero_dim(f: Frame) -> Check:
    l = f.lattice
    cmp = f.cmp
    for a in range(l.size):
        if l.join_all(c for c in cmp if l.leq[c, a]) != a:
            return Check.fail("not the join of complemented elements below it", f.label(a))
    return Check.ok()


def frame_predicate(f: Frame, kind: str) -> Check:
    if kind == "continuous":
        return _approximated(f, f.way_below, "way-below approximants")
    if kind == "stably_continuous":
        return all_of(("continuous", lambda: frame_predicate(f, "continuous")), ("stable", lambda: _stable(f)))
    if kind == "compact":
        if f.way_below[f.top, f.top]:
            return Check.ok()
        return Check.fail("top is not way below itself", f.label(f.top))
    if kind == "regular":
        return _approximated(f, well_inside(f), "well-inside approximants")
    if kind == "zero_dim":
        return _zero_dim(f)
    if kind == "locally_stone":
        return all_of(
            ("continuous", lambda: frame_predicate(f, "continuous")),
            ("zero_dim", lambda: _zero_dim(f)),
        )
    if kind == "stone":
        return all_of(
            ("compact", lambda: frame_predicate(f, "compact")),
            ("locally_stone", lambda: frame_predicate(f, "locally_stone")),
        )
    if kind == "spatial":
        pts = points(f)
        if pts.zeta_is_iso:
            return Check.ok()
        return Check.fail("zeta is not injective", pts.zeta_witness)
    raise ValueError(f"unknown frame predicate {kind!r}")


def frame_predicates(f: Frame, kinds: Sequence[str] = FRAME_PREDICATES) -> dict[str, Check]:
    return {k: frame_predicate(f, k) for k in kinds}


def is_prime_filter(l: FiniteLattice, members: frozenset[int]) -> bool:
    if l.bottom in members or l.top not in members:
        return False
    inside = np.zeros(l.size, dtype=bool)
    inside[list(members)] = True
    joined = inside[l.join]
    return not (joined & ~inside[:, None] & ~inside[None, :]).any()


def is_completely_prime_bruteforce(l: FiniteLattice, members: frozenset[int], guard: int | None = None) -> bool:
    """Every family whose join lies in the filter meets the filter."""
    require_within_guard(l.size, "completely-prime oracle", guard)
    if l.top not in members:
        return False
    joins = sb.subset_table_fold(list(range(l.size)), l.join, l.bottom)
    inside = np.zeros(l.size, dtype=bool)
    inside[list(members)] = True
    fmask = sb.mask_of(members)
    return not (inside[joins] & ((sb.all_masks(l.size) & fmask) == 0)).any()


@dataclass(frozen=True, eq=False)
class FramePointSet:
    frame: Frame
    points: tuple[frozenset[int], ...]
    generators: tuple[int, ...]
    zeta: tuple[int, ...]

    @cached_property
    def labels(self) -> tuple[str, ...]:
        return tuple("up:" + self.frame.label(g) for g in self.generators)

    @cached_property
    def space(self) -> FiniteSpace:
        return validate_space(self.labels, set(self.zeta))

    @property
    def zeta_is_iso(self) -> bool:
        return self.zeta_witness is None

    @cached_property
    def zeta_witness(self):
        """First pair of distinct elements with the same zeta image, or a failure of order reflection."""
        l = self.frame.lattice
        for a in range(l.size):
            for b in range(l.size):
                if (self.zeta[a] & ~self.zeta[b] == 0) != bool(l.leq[a, b]):
                    return (self.frame.label(a), self.frame.label(b))
        return None


def points(f: Frame, guard: int | None = None) -> FramePointSet:
    """Prime filters of a finite frame, each principal on a join-irreducible.

    Within the size guard each prime filter is also checked against the
    completely-prime definition, and non-prime proper filters must fail it.
    """
    l = f.lattice
    pts = []
    gens = []
    oracle = l.size <= size_guard(guard)
    for g, filt in enumerate(lattice_filters(l)):
        prime = is_prime_filter(l, filt)
        if oracle and prime != is_completely_prime_bruteforce(l, filt, guard) and l.bottom not in filt:
            raise OracleDisagreement("prime and completely prime disagree", witness=f.label(g))
        if prime:
            pts.append(filt)
            gens.append(g)
    zeta = tuple(sb.mask_of(i for i, p in enumerate(pts) if a in p) for a in range(l.size))
    return FramePointSet(f, tuple(pts), tuple(gens), zeta)


def pt_map(h: StructureMap | Sequence[int], src: FramePointSet, dst: FramePointSet) -> tuple[int, ...]:
    """For ``h: L1 -> L2``, send each point ``p`` of ``L2`` to ``h^-1[p]``, a point of ``L1``."""
    table = as_table(h)
    index = {p: i for i, p in enumerate(src.points)}
    out = []
    for p in dst.points:
        pre = frozenset(a for a in range(len(table)) if table[a] in p)
        if pre not in index:
            raise NotFrameHom("preimage of a point is not a point", witness=sorted(p))
        out.append(index[pre])
    return tuple(out)


@dataclass(frozen=True)
class FrameHomCheck:
    map: StructureMap
    is_frame_hom: bool
    is_proper: bool
    witness: object = None


def _frame_hom_failure(table: Sequence[int], l1: FiniteLattice, l2: FiniteLattice, guard):
    h = np.array(table, dtype=np.int64)
    if h[l1.top] != l2.top:
        return ("h(1)=1", l1.elements[l1.top])
    if h[l1.bottom] != l2.bottom:
        return ("h(0)=0", l1.elements[l1.bottom])
    for name, t1, t2 in (("h(a^b)=h(a)^h(b)", l1.meet, l2.meet), ("h(avb)=h(a)vh(b)", l1.join, l2.join)):
        bad = h[t1] != t2[h[:, None], h[None, :]]
        if bad.any():
            a, b = (int(v) for v in np.argwhere(bad)[0])
            return (name, l1.elements[a], l1.elements[b])
    if l1.size <= size_guard(guard):
        src = sb.subset_table_fold(list(range(l1.size)), l1.join, l1.bottom)
        img = sb.subset_table_fold([int(v) for v in h], l2.join, l2.bottom)
        bad2 = np.flatnonzero(h[src] != img)
        if bad2.size:
            return ("h(V S)=V h[S]", int(bad2[0]))
    return None


def check_frame_hom(
    h: StructureMap | Sequence[int],
    l1: Frame,
    l2: Frame,
    strict: bool = True,
    guard: int | None = None,
) -> FrameHomCheck:
    table = as_table(h)
    if len(table) != l1.size or any(not 0 <= v < l2.size for v in table):
        raise ValidationError("map is not a total function between the frames")
    fail = _frame_hom_failure(table, l1.lattice, l2.lattice, guard)
    if fail is not None:
        if strict:
            raise NotFrameHom(f"not a frame homomorphism ({fail[0]})", witness=fail)
        return FrameHomCheck(StructureMap("frame", table), False, False, fail)
    wb1, wb2 = l1.way_below, l2.way_below
    h_arr = np.array(table, dtype=np.int64)
    bad = wb1 & ~wb2[h_arr[:, None], h_arr[None, :]]
    proper = not bad.any()
    witness = None
    if not proper:
        a, b = (int(v) for v in np.argwhere(bad)[0])
        witness = ("a<<b but h(a) not << h(b)", l1.label(a), l1.label(b))
    return FrameHomCheck(StructureMap("frame", table, proper), True, proper, witness)


def scott_open_filters(f: Frame, guard: int | None = None) -> list[frozenset[int]]:
    """Filters of the frame (improper one included) passing the directed-family test."""
    filts = lattice_filters(f.lattice)
    flags = scott_open_filter_flags(f.lattice, filts, guard)
    return [x for x, ok in zip(filts, flags) if ok]
