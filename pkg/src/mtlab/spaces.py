"""Finite topological spaces stored with their full family of open sets.

Subsets of the point set are bitmasks: bit ``i`` is point ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from ._subsets import bits, mask_of
from .checks import Check, all_of
from .errors import DuplicateLabel, NotATopology, OracleDisagreement, ValidationError
from .order import subset_label

SPACE_PREDICATES = (
    "T0",
    "T1",
    "sober",
    "compact",
    "locally_compact",
    "hausdorff",
    "zero_dim",
    "stably_locally_compact",
    "stably_compact",
    "locally_stone",
    "stone",
)


@dataclass(frozen=True, eq=False)
class FiniteSpace:
    points: tuple[str, ...]
    opens: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    @cached_property
    def sorted_opens(self) -> tuple[int, ...]:
        return tuple(sorted(self.opens, key=lambda m: (m.bit_count(), m)))

    @cached_property
    def closeds(self) -> frozenset[int]:
        return frozenset(self.full ^ u for u in self.opens)

    @cached_property
    def index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.points)}

    def interior(self, a: int) -> int:
        out = 0
        for u in self.opens:
            if u & ~a == 0:
                out |= u
        return out

    def closure(self, a: int) -> int:
        return self.full ^ self.interior(self.full ^ a)

    @cached_property
    def neighbourhood(self) -> tuple[int, ...]:
        """Smallest open set containing each point."""
        out = []
        for x in range(self.size):
            m = self.full
            for u in self.opens:
                if u >> x & 1:
                    m &= u
            out.append(m)
        return tuple(out)

    def label(self, mask: int) -> str:
        return subset_label(self.points, mask)


def validate_space(points: Sequence[str], opens: Sequence[int]) -> FiniteSpace:
    points = tuple(points)
    if len(set(points)) != len(points):
        dup = next(p for p in points if points.count(p) > 1)
        raise DuplicateLabel(f"duplicate point label {dup!r}", witness=dup)
    full = (1 << len(points)) - 1
    fam = frozenset(int(u) for u in opens)
    for u in fam:
        if u < 0 or u & ~full:
            raise ValidationError(f"open set {u} mentions unknown points")
    if 0 not in fam:
        raise NotATopology("empty set is not open", witness=("{}",))
    if full not in fam:
        raise NotATopology("whole space is not open", witness=(subset_label(points, full),))
    ordered = sorted(fam)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if a | b not in fam or a & b not in fam:
                raise NotATopology(
                    "open sets not closed under union/intersection",
                    witness=(subset_label(points, a), subset_label(points, b)),
                )
    return FiniteSpace(points, fam)


def space_from_labels(points: Sequence[str], opens: Sequence[Sequence[str]]) -> FiniteSpace:
    index = {p: i for i, p in enumerate(points)}
    masks = []
    for u in opens:
        for p in u:
            if p not in index:
                raise ValidationError(f"open set mentions unknown point {p!r}", witness=p)
        masks.append(mask_of(index[p] for p in u))
    return validate_space(points, masks)


def discrete_space(n: int, labels: Sequence[str] | None = None) -> FiniteSpace:
    labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
    return FiniteSpace(labels, frozenset(range(1 << n)))


def indiscrete_space(n: int, labels: Sequence[str] | None = None) -> FiniteSpace:
    labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
    return FiniteSpace(labels, frozenset({0, (1 << n) - 1}))


def sierpinski_space() -> FiniteSpace:
    return FiniteSpace(("0", "1"), frozenset({0b00, 0b10, 0b11}))


@dataclass(frozen=True, eq=False)
class Preorder:
    elements: tuple[str, ...]
    leq: np.ndarray

    @property
    def is_antisymmetric(self) -> bool:
        n = len(self.elements)
        return not (self.leq & self.leq.T & ~np.eye(n, dtype=bool)).any()


def specialization(x: FiniteSpace) -> Preorder:
    """``a <= b`` iff every open containing ``a`` contains ``b``."""
    n = x.size
    leq = np.zeros((n, n), dtype=bool)
    for a in range(n):
        for b in range(n):
            leq[a, b] = all(u >> b & 1 for u in x.opens if u >> a & 1)
    return Preorder(x.points, leq)


def from_preorder(points: Sequence[str], leq: np.ndarray) -> FiniteSpace:
    """Alexandrov topology: the open sets are the up-sets of the preorder."""
    n = len(points)
    ups = [mask_of(np.flatnonzero(leq[a]).tolist()) for a in range(n)]
    opens = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for d in frontier:
            for u in ups:
                v = d | u
                if v not in opens:
                    opens.add(v)
                    nxt.append(v)
        frontier = nxt
    return FiniteSpace(tuple(points), frozenset(opens))


def saturated_sets(x: FiniteSpace) -> frozenset[int]:
    """Intersections of open sets, cross-checked against specialization up-sets."""
    sat = {x.full}
    for u in x.opens:
        sat |= {s & u for s in sat}
    spec = specialization(x).leq
    upsets = {
        m
        for m in range(1 << x.size)
        if all(spec[a, b] <= bool(m >> b & 1) for a in bits(m) for b in range(x.size))
    }
    if sat != upsets:
        raise OracleDisagreement("saturated sets differ from specialization up-sets")
    return frozenset(sat)


def finite_subcover(target: int, family: Sequence[int]) -> tuple[int, ...] | None:
    """A subfamily of at most ``popcount(target)`` members covering ``target``.

    Returns None when ``family`` does not cover ``target`` at all.
    """
    if target & ~mask_of_union(family):
        return None
    chosen = []
    for x in bits(target):
        chosen.append(next(u for u in family if u >> x & 1))
    return tuple(chosen)


def mask_of_union(family: Sequence[int]) -> int:
    out = 0
    for u in family:
        out |= u
    return out


def is_compact_subset(x: FiniteSpace, a: int) -> bool:
    """Every open cover of ``a`` has a finite subcover.

    The family of all opens is the largest cover; a pointwise subcover of it
    is built explicitly.  Any smaller cover admits the same construction.
    """
    return finite_subcover(a, x.sorted_opens) is not None


def compact_saturated(x: FiniteSpace) -> frozenset[int]:
    return frozenset(s for s in saturated_sets(x) if is_compact_subset(x, s))


def irreducible_closeds(x: FiniteSpace) -> list[int]:
    cs = sorted(x.closeds)
    out = []
    for c in cs:
        if c == 0:
            continue
        proper = [d for d in cs if d != c and d & ~c == 0]
        if not any(d1 | d2 == c for d1 in proper for d2 in proper):
            out.append(c)
    return out


def _direct(x: FiniteSpace, kind: str) -> Check:
    n = x.size
    if kind == "T0":
        spec = specialization(x)
        if spec.is_antisymmetric:
            return Check.ok()
        a, b = (int(i) for i in np.argwhere(spec.leq & spec.leq.T & ~np.eye(n, dtype=bool))[0])
        return Check.fail("topologically indistinguishable points", (x.points[a], x.points[b]))
    if kind == "T1":
        for p in range(n):
            if (x.full ^ (1 << p)) not in x.opens:
                return Check.fail("point not closed", x.points[p])
        return Check.ok()
    if kind == "sober":
        for c in irreducible_closeds(x):
            gens = [p for p in range(n) if x.closure(1 << p) == c]
            if len(gens) != 1:
                return Check.fail("irreducible closed set without unique generic point", x.label(c))
        return Check.ok()
    if kind == "compact":
        return Check(is_compact_subset(x, x.full))
    if kind == "locally_compact":
        for u in x.opens:
            for p in bits(u):
                if not any(
                    v >> p & 1 and v & ~u == 0 and is_compact_subset(x, v) for v in x.opens
                ):
                    return Check.fail("no compact neighbourhood inside open", (x.points[p], x.label(u)))
        return Check.ok()
    if kind == "hausdorff":
        for p in range(n):
            for q in range(p + 1, n):
                if not any(
                    u >> p & 1 and v >> q & 1 and u & v == 0 for u in x.opens for v in x.opens
                ):
                    return Check.fail("points not separated", (x.points[p], x.points[q]))
        return Check.ok()
    if kind == "zero_dim":
        clopen = [u for u in x.opens if (x.full ^ u) in x.opens]

        def basis() -> Check:
            for u in x.opens:
                if mask_of_union([c for c in clopen if c & ~u == 0]) != u:
                    return Check.fail("open not a union of clopens", x.label(u))
            return Check.ok()

        return all_of(("T1", lambda: _direct(x, "T1")), ("clopen basis", basis))
    if kind == "stably_locally_compact":

        def coherent() -> Check:
            ks = sorted(compact_saturated(x))
            for a in ks:
                for b in ks:
                    if not is_compact_subset(x, a & b):
                        return Check.fail("intersection of compact saturated sets not compact", (x.label(a), x.label(b)))
            return Check.ok()

        return all_of(
            ("sober", lambda: _direct(x, "sober")),
            ("locally_compact", lambda: _direct(x, "locally_compact")),
            ("coherent", coherent),
        )
    if kind == "stably_compact":
        return all_of(
            ("stably_locally_compact", lambda: _direct(x, "stably_locally_compact")),
            ("compact", lambda: _direct(x, "compact")),
        )
    if kind == "locally_stone":
        return all_of(
            ("zero_dim", lambda: _direct(x, "zero_dim")),
            ("locally_compact", lambda: _direct(x, "locally_compact")),
            ("hausdorff", lambda: _direct(x, "hausdorff")),
        )
    if kind == "stone":
        return all_of(
            ("locally_stone", lambda: _direct(x, "locally_stone")),
            ("compact", lambda: _direct(x, "compact")),
        )
    raise ValueError(f"unknown space predicate {kind!r}")


def space_predicate_direct(x: FiniteSpace, kind: str) -> Check:
    return _direct(x, kind)


def space_predicate_via_mt(x: FiniteSpace, kind: str) -> Check:
    from .mt import COMPACTNESS_KINDS, compactness_check, separation_check, validate_mt

    m = validate_mt(x)
    if kind in COMPACTNESS_KINDS:
        return compactness_check(m, kind)
    return separation_check(m, kind)


def space_predicates(x: FiniteSpace, kind: str) -> Check:
    """Evaluate on the space and on its powerset MT-algebra; the two must agree."""
    direct = _direct(x, kind)
    via = space_predicate_via_mt(x, kind)
    if direct.holds != via.holds:
        raise OracleDisagreement(
            f"{kind}: space says {direct.holds}, MT-algebra says {via.holds}",
            witness=(direct, via),
        )
    return direct


@dataclass(frozen=True)
class ContinuousMapCheck:
    map: tuple[int, ...]
    is_continuous: bool
    is_proper: bool
    witness: object = None


def preimage(f: Sequence[int], a: int) -> int:
    return mask_of(p for p, q in enumerate(f) if a >> q & 1)


def check_map(f: Sequence[int], x: FiniteSpace, y: FiniteSpace) -> ContinuousMapCheck:
    """Continuity and properness of a point function ``f: x -> y``."""
    f = tuple(int(q) for q in f)
    if len(f) != x.size or any(not 0 <= q < y.size for q in f):
        raise ValidationError("map is not a total function between the point sets")
    for v in y.sorted_opens:
        if preimage(f, v) not in x.opens:
            return ContinuousMapCheck(f, False, False, ("preimage not open", y.label(v)))
    for k in sorted(compact_saturated(y)):
        if not is_compact_subset(x, preimage(f, k)):
            return ContinuousMapCheck(f, True, False, ("preimage not compact", y.label(k)))
    return ContinuousMapCheck(f, True, True)


def compose_maps(g: Sequence[int], f: Sequence[int]) -> tuple[int, ...]:
    """``g . f``: apply ``f`` first."""
    return tuple(g[q] for q in f)


def is_homeomorphism(f: Sequence[int], x: FiniteSpace, y: FiniteSpace) -> bool:
    f = tuple(f)
    if len(f) != x.size or sorted(f) != list(range(y.size)):
        return False
    image = {mask_of(f[p] for p in bits(u)) for u in x.opens}
    return image == set(y.opens)
