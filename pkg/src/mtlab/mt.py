"""MT-algebras: finite boolean algebras with a Kuratowski interior operator.

Every finite boolean algebra is the powerset of its atoms, so an
``MTAlgebra`` is normalised on construction: element ``a`` is the bitmask of
the atoms below it, meet is ``&``, join is ``|`` and negation is ``top ^ a``.
Labels from the input document are kept per element.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import _subsets as sb
from .checks import Check, all_of
from .config import require_within_guard, size_guard
from .errors import (
    BijectionFailure,
    KuratowskiViolation,
    NotBooleanAlgebra,
    NotBooleanHom,
    NotMTMorphism,
    NotSober,
    OracleDisagreement,
    ValidationError,
)
from .maps import StructureMap, as_table
from .order import (
    FiniteBooleanAlgebra,
    FiniteLattice,
    FinitePoset,
    boolean_powerset,
    join_irreducibles,
    lattice_filters,
    lattice_filters_bruteforce,
    lattice_of_sets,
    subset_label,
    validate_boolean,
)
from .spaces import FiniteSpace

SEPARATION_AXIOMS = ("T0", "T_half", "T1", "sober", "hausdorff", "regular", "zero_dim")
COMPACTNESS_KINDS = (
    "compact",
    "locally_compact",
    "stably_locally_compact",
    "stably_compact",
    "locally_stone",
    "stone",
)
_AXIOM_ALIASES = {a.lower(): a for a in SEPARATION_AXIOMS} | {"thalf": "T_half", "t1/2": "T_half"}


def normalize_axiom(name: str) -> str:
    try:
        return _AXIOM_ALIASES[name.lower()]
    except KeyError:
        raise ValueError(f"unknown separation axiom {name!r}") from None


@dataclass(frozen=True, eq=False)
class MTAlgebra:
    n: int
    box: tuple[int, ...]
    labels: tuple[str, ...]
    atom_labels: tuple[str, ...]
    space: FiniteSpace | None = None

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def top(self) -> int:
        return (1 << self.n) - 1

    @property
    def atoms(self) -> tuple[int, ...]:
        return tuple(1 << i for i in range(self.n))

    def neg(self, a: int) -> int:
        return self.top ^ a

    def dia(self, a: int) -> int:
        return self.top ^ self.box[self.top ^ a]

    @staticmethod
    def le(a: int, b: int) -> bool:
        return a & ~b == 0

    def label(self, a: int) -> str:
        return self.labels[a]

    def labels_of(self, xs: Iterable[int]) -> list[str]:
        return [self.labels[x] for x in sorted(xs)]

    @cached_property
    def index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def meet_all(self, xs: Iterable[int]) -> int:
        acc = self.top
        for x in xs:
            acc &= x
        return acc

    def join_all(self, xs: Iterable[int]) -> int:
        acc = 0
        for x in xs:
            acc |= x
        return acc

    @cached_property
    def box_array(self) -> np.ndarray:
        return np.array(self.box, dtype=np.int64)

    @cached_property
    def leq(self) -> np.ndarray:
        idx = np.arange(self.size, dtype=np.int64)
        return (idx[:, None] & ~idx[None, :]) == 0

    @cached_property
    def opens(self) -> frozenset[int]:
        return frozenset(a for a in range(self.size) if self.box[a] == a)

    @cached_property
    def sorted_opens(self) -> tuple[int, ...]:
        return tuple(sorted(self.opens, key=lambda m: (m.bit_count(), m)))

    @cached_property
    def closeds(self) -> frozenset[int]:
        return frozenset(a for a in range(self.size) if self.dia(a) == a)

    @cached_property
    def sorted_closeds(self) -> tuple[int, ...]:
        return tuple(sorted(self.closeds, key=lambda m: (m.bit_count(), m)))

    @cached_property
    def ba(self) -> FiniteBooleanAlgebra:
        b = boolean_powerset(self.n, self.atom_labels)
        lat = b.lattice
        relabeled = FiniteLattice(FinitePoset(self.labels, lat.leq), lat.meet, lat.join, lat.bottom, lat.top)
        return FiniteBooleanAlgebra(relabeled, b.neg, b.atom_list)

    @cached_property
    def opens_lattice(self) -> FiniteLattice:
        return lattice_of_sets(self.sorted_opens, [self.labels[u] for u in self.sorted_opens])

    @cached_property
    def closeds_lattice(self) -> FiniteLattice:
        return lattice_of_sets(self.sorted_closeds, [self.labels[c] for c in self.sorted_closeds])

    @cached_property
    def classes(self) -> "ElementClasses":
        return element_classes(self)

    def up(self, a: int) -> frozenset[int]:
        return frozenset(b for b in range(self.size) if a & ~b == 0)


def check_kuratowski(box: Sequence[int], n: int, labels: Sequence[str] | None = None) -> None:
    size = 1 << n
    top = size - 1
    if labels is None:
        labels = [str(a) for a in range(size)]
    b = np.asarray(box, dtype=np.int64)
    if b.shape != (size,) or (b < 0).any() or (b > top).any():
        raise ValidationError("box table is not a total map on the algebra")
    if b[top] != top:
        raise KuratowskiViolation("box 1 != 1", witness=("box(1)=1", labels[top]))
    idx = np.arange(size, dtype=np.int64)
    deflate = np.flatnonzero(b & ~idx)
    if deflate.size:
        a = int(deflate[0])
        raise KuratowskiViolation(f"box a <= a fails at {labels[a]}", witness=("box(a)<=a", labels[a]))
    idem = np.flatnonzero(b & ~b[b])
    if idem.size:
        a = int(idem[0])
        raise KuratowskiViolation(
            f"box a <= box box a fails at {labels[a]}", witness=("box(a)<=box(box(a))", labels[a])
        )
    mult = b[idx[:, None] & idx[None, :]] != (b[:, None] & b[None, :])
    if mult.any():
        a, c = (int(v) for v in np.argwhere(mult)[0])
        raise KuratowskiViolation(
            f"box(a ^ b) != box a ^ box b at {labels[a]}, {labels[c]}",
            witness=("box(a^b)=box(a)^box(b)", labels[a], labels[c]),
        )


def mt_from_table(
    n: int,
    box: Sequence[int],
    labels: Sequence[str] | None = None,
    atom_labels: Sequence[str] | None = None,
    space: FiniteSpace | None = None,
) -> MTAlgebra:
    """Build from a bitmask-indexed box table over ``n`` atoms, checking the axioms."""
    if atom_labels is None:
        atom_labels = tuple(str(i) for i in range(n))
    if labels is None:
        labels = tuple(subset_label(atom_labels, a) for a in range(1 << n))
    check_kuratowski(box, n, labels)
    return MTAlgebra(n, tuple(int(v) for v in box), tuple(labels), tuple(atom_labels), space)


def _interior_table(x: FiniteSpace) -> list[int]:
    return [x.interior(a) for a in range(1 << x.size)]


def validate_mt(source, box: Sequence[int] | None = None) -> MTAlgebra:
    """Accept a finite space, or a boolean algebra (or lattice) with a box table.

    A space yields its powerset algebra with topological interior.  For a
    table input ``box[i]`` is the index of the interior of element ``i`` in
    the algebra's own indexing; elements are re-indexed by their atoms.
    """
    if isinstance(source, FiniteSpace):
        # spaces are immutable, so the algebra is memoised on the instance
        cached = source.__dict__.get("_powerset_mt")
        if cached is None:
            labels = tuple(source.label(a) for a in range(1 << source.size))
            cached = mt_from_table(source.size, _interior_table(source), labels, source.points, space=source)
            object.__setattr__(source, "_powerset_mt", cached)
        return cached
    if isinstance(source, FiniteLattice):
        try:
            source = validate_boolean(source)
        except NotBooleanAlgebra:
            raise
    if not isinstance(source, FiniteBooleanAlgebra):
        raise ValidationError(f"cannot build an MT-algebra from {type(source).__name__}")
    if box is None:
        raise ValidationError("boolean algebra input needs a box table")
    ba = source
    if len(box) != ba.size:
        raise ValidationError("box table length differs from algebra size")
    code = [ba.atoms_below(a) for a in range(ba.size)]
    n = len(ba.atom_list)
    if sorted(code) != list(range(1 << n)):
        raise NotBooleanAlgebra("algebra is not the powerset of its atoms")
    labels = [""] * (1 << n)
    table = [0] * (1 << n)
    for a in range(ba.size):
        labels[code[a]] = ba.elements[a]
        table[code[a]] = code[int(box[a])]
    atom_labels = tuple(ba.elements[x] for x in ba.atom_list)
    return mt_from_table(n, table, labels, atom_labels)


def closure(m: MTAlgebra, a: int) -> int:
    return m.dia(a)


@dataclass(frozen=True)
class ElementClasses:
    opens: frozenset[int]
    closeds: frozenset[int]
    saturated: frozenset[int]
    locally_closed: frozenset[int]
    weakly_locally_closed: frozenset[int]
    regular_closed: frozenset[int]
    gc: frozenset[int]
    clopen: frozenset[int]
    compact: frozenset[int]
    compact_saturated: frozenset[int]


def saturated_elements(m: MTAlgebra) -> frozenset[int]:
    """All meets of families of opens; the empty meet is the top."""
    sat = {m.top}
    for u in m.opens:
        sat |= {s & u for s in sat}
    return frozenset(sat)


def gc_elements(m: MTAlgebra) -> frozenset[int]:
    """Elements equal to the meet of ``dia box c`` over all ``c`` with ``a <= box c``.

    The empty family (no ``c`` qualifies) gives the top.
    """
    box = m.box_array
    idx = np.arange(m.size, dtype=np.int64)
    vals = m.top ^ box[m.top ^ box]
    qualifies = (idx[:, None] & ~box[None, :]) == 0
    meets = np.bitwise_and.reduce(np.where(qualifies, vals[None, :], m.top), axis=1)
    return frozenset(np.flatnonzero(meets == idx).tolist())


def compact_elements_cover(m: MTAlgebra, guard: int | None = None) -> frozenset[int]:
    """Compactness by its cover definition, over every family of opens.

    For each family ``S`` a finite subfamily is built by choosing, for every
    atom, the first member of ``S`` containing it; ``a`` is compact when
    every ``S`` covering ``a`` has this chosen subfamily covering ``a`` too.
    """
    opens = list(m.sorted_opens)
    require_within_guard(len(opens), "compactness oracle (families of opens)", guard)
    masks = sb.all_masks(len(opens))
    joins = sb.subset_unions(opens)
    chosen = np.zeros_like(joins)
    for x in range(m.n):
        holders = [i for i, u in enumerate(opens) if u >> x & 1]
        picked = np.zeros_like(joins)
        for i in reversed(holders):
            # lowest-indexed member of the family containing x
            picked = np.where((masks >> i) & 1 == 1, opens[i], picked)
        chosen |= picked & (1 << x)
    # a cover is a (join, chosen) pair; packing both into one key dedupes quickly
    keys = np.unique((joins.astype(object) << m.n) | chosen if m.n > 31 else (joins << m.n) | chosen)
    full_joins, full_chosen = keys >> m.n, keys & m.top
    out = []
    for a in range(m.size):
        covers = (full_joins & a) == a
        if not (covers & ((full_chosen & a) != a)).any():
            out.append(a)
    return frozenset(out)


def compact_elements_directed(m: MTAlgebra, guard: int | None = None) -> frozenset[int]:
    """Directed form: every directed family of opens whose join lies above ``a``
    has a single member above ``a``."""
    opens = list(m.sorted_opens)
    require_within_guard(len(opens), "compactness oracle (directed families)", guard)
    arr = np.array(opens, dtype=np.int64)
    le = (arr[:, None] & ~arr[None, :]) == 0
    directed = sb.directed_masks(le)
    masks = sb.all_masks(len(opens))
    joins = sb.subset_unions(opens)
    out = []
    for a in range(m.size):
        above = sb.mask_of(i for i, u in enumerate(opens) if a & ~u == 0)
        bad = directed & ((joins & a) == a) & ~sb.hits(masks, above)
        if not bad.any():
            out.append(a)
    return frozenset(out)


def compact_elements_fip(m: MTAlgebra, guard: int | None = None) -> frozenset[int]:
    """Closed-family form: if a family of closed elements meets ``a`` in 0 then
    a finite subfamily already does."""
    closeds = list(m.sorted_closeds)
    require_within_guard(len(closeds), "compactness oracle (closed families)", guard)
    masks = sb.all_masks(len(closeds))
    meets = sb.subset_intersections(closeds, m.top)
    missing = [sb.mask_of(i for i, c in enumerate(closeds) if not c >> x & 1) for x in range(m.n)]
    out = []
    for a in range(m.size):
        disjoint = (meets & a) == 0
        finite = np.ones_like(disjoint)
        for x in sb.bits(a):
            finite &= sb.hits(masks, missing[x])
        if not (disjoint & ~finite).any():
            out.append(a)
    return frozenset(out)


def element_classes(m: MTAlgebra, guard: int | None = None) -> ElementClasses:
    """Every class by its literal definition.

    Compact elements: in a finite algebra every element is compact; when the
    open family fits under the size guard this is cross-checked against the
    cover definition.
    """
    opens = m.opens
    closeds = m.closeds
    sat = saturated_elements(m)
    lc = frozenset(u & c for u in opens for c in closeds)
    wlc = frozenset(s & c for s in sat for c in closeds)
    reg = frozenset(a for a in range(m.size) if m.dia(m.box[a]) == a)
    compact = frozenset(range(m.size))
    if len(opens) <= size_guard(guard):
        oracle = compact_elements_cover(m, guard)
        if oracle != compact:
            raise OracleDisagreement("cover-definition compactness disagrees", witness=sorted(compact ^ oracle))
    return ElementClasses(
        opens=opens,
        closeds=closeds,
        saturated=sat,
        locally_closed=lc,
        weakly_locally_closed=wlc,
        regular_closed=reg,
        gc=gc_elements(m),
        clopen=opens & closeds,
        compact=compact,
        compact_saturated=compact & sat,
    )


def wedge_below(m: MTAlgebra, compact: Iterable[int] | None = None) -> np.ndarray:
    """``rel[a, b]`` iff some compact ``k`` has ``a <= k <= b``."""
    ks = sorted(m.classes.compact if compact is None else compact)
    le = m.leq.astype(np.int64)
    return (le[:, ks] @ le[ks, :]) > 0


def saturation(m: MTAlgebra, k: int) -> int:
    """Meet of the opens above ``k``."""
    return m.meet_all(u for u in m.opens if k & ~u == 0)


def saturated_wedge_below(m: MTAlgebra) -> np.ndarray:
    """Like ``wedge_below`` but with the interpolant required to be compact saturated."""
    return wedge_below(m, m.classes.compact_saturated)


def join_generates(m: MTAlgebra, gens: Iterable[int]) -> Check:
    g = np.array(sorted(gens), dtype=np.int64)
    idx = np.arange(m.size, dtype=np.int64)
    if g.size == 0:
        joins = np.zeros(m.size, dtype=np.int64)
    else:
        below = (g[None, :] & ~idx[:, None]) == 0
        joins = np.bitwise_or.reduce(np.where(below, g[None, :], 0), axis=1)
    bad = np.flatnonzero(joins != idx)
    if bad.size:
        return Check.fail("not a join of generators", m.label(int(bad[0])))
    return Check.ok()


def _sober_points(m: MTAlgebra) -> Check:
    lat = m.closeds_lattice
    closed_elems = m.sorted_closeds
    diamonds = {m.dia(x) for x in m.atoms}
    for j in sorted(join_irreducibles(lat)):
        p = closed_elems[j]
        if p not in diamonds:
            return Check.fail("join-irreducible closed element is not the closure of an atom", m.label(p))
    return Check.ok()


def _open_approximation(m: MTAlgebra, keep) -> Check:
    for a in m.sorted_opens:
        j = m.join_all(b for b in m.sorted_opens if keep(a, b))
        if j != a:
            return Check.fail("open element not approximated", m.label(a))
    return Check.ok()


def _zdim_condition(m: MTAlgebra) -> Check:
    clopen = m.classes.clopen
    for a in m.sorted_opens:
        if m.join_all(b for b in clopen if b & ~a == 0) != a:
            return Check.fail("open element not a join of clopens", m.label(a))
    return Check.ok()


def zdim_condition(m: MTAlgebra) -> Check:
    """Every open is the join of the clopens below it."""
    return _zdim_condition(m)


def zdim_closed_form(m: MTAlgebra) -> Check:
    """Every closed is the meet of the clopens above it."""
    clopen = m.classes.clopen
    for c in m.sorted_closeds:
        if m.meet_all(d for d in clopen if c & ~d == 0) != c:
            return Check.fail("closed element not a meet of clopens", m.label(c))
    return Check.ok()


def separation_check(m: MTAlgebra, axiom: str) -> Check:
    axiom = normalize_axiom(axiom)
    cl = m.classes
    if axiom == "T0":
        return join_generates(m, cl.weakly_locally_closed)
    if axiom == "T_half":
        return join_generates(m, cl.locally_closed)
    if axiom == "T1":
        return join_generates(m, cl.closeds)
    if axiom == "hausdorff":
        return join_generates(m, cl.gc)
    if axiom == "sober":
        return all_of(("T0", lambda: separation_check(m, "T0")), ("points", lambda: _sober_points(m)))
    if axiom == "regular":
        return all_of(
            ("T1", lambda: separation_check(m, "T1")),
            ("regularity", lambda: _open_approximation(m, lambda a, b: m.dia(b) & ~a == 0)),
        )
    if axiom == "zero_dim":
        return all_of(("T1", lambda: separation_check(m, "T1")), ("ZDim", lambda: _zdim_condition(m)))
    raise AssertionError(axiom)


def _locally_compact(m: MTAlgebra) -> Check:
    wb = wedge_below(m)
    return _open_approximation(m, lambda a, b: bool(wb[b, a]))


def _ks_meet_closed(m: MTAlgebra) -> Check:
    ks = sorted(m.classes.compact_saturated)
    kset = m.classes.compact_saturated
    for k in ks:
        for j in ks:
            if k & j not in kset:
                return Check.fail("meet of compact saturated elements not compact saturated", (m.label(k), m.label(j)))
    return Check.ok()


def compactness_check(m: MTAlgebra, kind: str) -> Check:
    if kind == "compact":
        if m.top in m.classes.compact:
            return Check.ok()
        return Check.fail("top not compact", m.label(m.top))
    if kind == "locally_compact":
        return _locally_compact(m)
    if kind == "stably_locally_compact":
        return all_of(
            ("locally_compact", lambda: _locally_compact(m)),
            ("sober", lambda: separation_check(m, "sober")),
            ("KS meet-closed", lambda: _ks_meet_closed(m)),
        )
    if kind == "stably_compact":
        return all_of(
            ("stably_locally_compact", lambda: compactness_check(m, "stably_locally_compact")),
            ("compact", lambda: compactness_check(m, "compact")),
        )
    if kind == "locally_stone":
        return all_of(
            ("zero_dim", lambda: separation_check(m, "zero_dim")),
            ("locally_compact", lambda: _locally_compact(m)),
            ("hausdorff", lambda: separation_check(m, "hausdorff")),
        )
    if kind == "stone":
        return all_of(
            ("locally_stone", lambda: compactness_check(m, "locally_stone")),
            ("compact", lambda: compactness_check(m, "compact")),
        )
    raise ValueError(f"unknown compactness kind {kind!r}")


def check_predicate(m: MTAlgebra, pred: str) -> Check:
    if pred in COMPACTNESS_KINDS:
        return compactness_check(m, pred)
    return separation_check(m, pred)


@dataclass(frozen=True, eq=False)
class FilterSet:
    algebra: MTAlgebra
    members: frozenset[int]
    generator: int
    is_open_filter: bool
    is_scott_open: bool

    def meet(self) -> int:
        return self.algebra.meet_all(self.members)


def is_filter(m: MTAlgebra, members: frozenset[int]) -> bool:
    if m.top not in members:
        return False
    for a in members:
        if any(b not in members for b in m.up(a)):
            return False
        if any(a & b not in members for b in members):
            return False
    return True


def is_open_filter(m: MTAlgebra, members: frozenset[int]) -> bool:
    return is_filter(m, members) and all(m.box[a] in members for a in members)


def scott_open_flags(m: MTAlgebra, filters: Sequence[frozenset[int]], guard: int | None = None) -> list[bool]:
    """For each open filter: every directed family of opens whose join it
    contains must have a member in it."""
    opens = list(m.sorted_opens)
    require_within_guard(len(opens), "Scott-open filter oracle", guard)
    arr = np.array(opens, dtype=np.int64)
    directed = sb.directed_masks((arr[:, None] & ~arr[None, :]) == 0)
    masks = sb.all_masks(len(opens))
    joins = sb.subset_unions(opens)
    flags = []
    for f in filters:
        member = np.zeros(m.size, dtype=bool)
        member[list(f)] = True
        fmask = sb.mask_of(i for i, u in enumerate(opens) if u in f)
        bad = directed & member[joins] & ~sb.hits(masks, fmask)
        flags.append(not bad.any())
    return flags


def enumerate_filters(m: MTAlgebra, kind: str = "open", guard: int | None = None) -> list[FilterSet]:
    """Open filters as up-closures of filters of the frame of opens.

    Improper filters are included.  Within the size guard the Scott-open flag
    is computed from the directed-family definition and must agree with the
    finite-case fact that every open filter is Scott-open; above it the fact
    is used directly.
    """
    if kind not in ("open", "scott_open"):
        raise ValueError(f"unknown filter kind {kind!r}")
    opens = m.sorted_opens
    frame = m.opens_lattice
    members = []
    gens = []
    for g in lattice_filters(frame):
        gen = opens[frame.meet_all(g)]
        up = frozenset(b for b in range(m.size) if any(opens[u] & ~b == 0 for u in g))
        if not is_open_filter(m, up) or frozenset(opens.index(u) for u in up & m.opens) != g:
            raise BijectionFailure("up-closure of an open filter base is not an open filter", witness=m.label(gen))
        members.append(up)
        gens.append(gen)
    if len(opens) > size_guard(guard):
        flags = [True] * len(members)  # finite case: every open filter is Scott-open
    else:
        flags = scott_open_flags(m, members, guard)
    if not all(flags):
        bad = gens[flags.index(False)]
        raise OracleDisagreement("open filter failed the Scott-open definition", witness=m.label(bad))
    out = [FilterSet(m, f, g, True, s) for f, g, s in zip(members, gens, flags)]
    if kind == "scott_open":
        out = [f for f in out if f.is_scott_open]
    return out


def open_filters_bruteforce(m: MTAlgebra, guard: int | None = None) -> list[frozenset[int]]:
    """Open filters found without assuming they are principal.

    Every family of opens is tested for being a filter of O(M); each hit is
    closed upwards in M and confirmed to be an open filter.
    """
    opens = m.opens_lattice
    out = []
    for base in lattice_filters_bruteforce(opens, guard):
        vals = [m.sorted_opens[i] for i in base]
        up = frozenset(b for b in range(m.size) if any(u & ~b == 0 for u in vals))
        if not is_open_filter(m, up):
            raise BijectionFailure("up-closure of a filter of opens is not an open filter", witness=sorted(base))
        out.append(up)
    return out


def require_sober(m: MTAlgebra, what: str) -> None:
    s = separation_check(m, "sober")
    if not s:
        raise NotSober(f"{what} needs a sober algebra ({s.reason})", witness=s.witness)


def keimel_paseka_check(m: MTAlgebra, guard: int | None = None) -> Check:
    """For every Scott-open filter ``F`` and open ``u``: ``meet F <= u`` implies ``u in F``."""
    require_sober(m, "Keimel-Paseka")
    for f in enumerate_filters(m, "scott_open", guard):
        lo = f.meet()
        for u in m.sorted_opens:
            if lo & ~u == 0 and u not in f.members:
                return Check.fail("open above meet of filter but outside it", (m.label(f.generator), m.label(u)))
    return Check.ok()


@dataclass(frozen=True, eq=False)
class HMTable:
    algebra: MTAlgebra
    alpha: dict[int, FilterSet]

    def rows(self) -> list[tuple[str, str]]:
        m = self.algebra
        return [(m.label(s), m.label(f.generator)) for s, f in sorted(self.alpha.items())]


def alpha(m: MTAlgebra, s: int) -> frozenset[int]:
    return frozenset(a for a in range(m.size) if s & ~m.box[a] == 0)


def hofmann_mislove(m: MTAlgebra, require_sober_hypothesis: bool = True, guard: int | None = None) -> HMTable:
    """Tabulate ``s -> {a | s <= box a}`` from compact saturated elements to
    Scott-open filters and verify it is an order-reversing bijection."""
    if require_sober_hypothesis:
        require_sober(m, "Hofmann-Mislove")
    ks = sorted(m.classes.compact_saturated)
    sfilt = enumerate_filters(m, "scott_open", guard)
    by_members = {f.members: f for f in sfilt}
    table = {}
    for s in ks:
        img = alpha(m, s)
        if img not in by_members:
            raise BijectionFailure("alpha(s) is not a Scott-open filter", witness=m.label(s))
        table[s] = by_members[img]
    for s in ks:
        for t in ks:
            if (t & ~s == 0) != (table[s].members <= table[t].members):
                raise BijectionFailure("alpha is not an order embedding", witness=(m.label(s), m.label(t)))
    kset = set(ks)
    for f in sfilt:
        s = f.meet()
        if s not in kset or table[s].members != f.members:
            raise BijectionFailure("alpha misses a Scott-open filter", witness=m.label(f.generator))
    if len(table) != len(sfilt):
        raise BijectionFailure("cardinalities differ", witness=(len(table), len(sfilt)))
    return HMTable(m, table)


@dataclass(frozen=True)
class MTMorphismCheckResult:
    map: StructureMap
    is_complete_boolean_hom: bool
    is_mt_morphism: bool
    is_proper: bool
    left_adjoint: tuple[int, ...]
    witness: object = None


def left_adjoint(f: Sequence[int], m: MTAlgebra, n: MTAlgebra) -> tuple[int, ...]:
    """``f*(x) = meet {a | x <= f(a)}``."""
    return tuple(m.meet_all(a for a in range(m.size) if x & ~f[a] == 0) for x in range(n.size))


def _boolean_hom_failure(F: np.ndarray, m: MTAlgebra, n: MTAlgebra, guard: int | None):
    idx = np.arange(m.size, dtype=np.int64)
    if F[0] != 0:
        return ("f(0)=0", m.label(0))
    if F[m.top] != n.top:
        return ("f(1)=1", m.label(m.top))
    bad = np.flatnonzero(F[m.top ^ idx] != (n.top ^ F))
    if bad.size:
        return ("f(~a)=~f(a)", m.label(int(bad[0])))
    for name, op in (("f(a^b)=f(a)^f(b)", np.bitwise_and), ("f(avb)=f(a)vf(b)", np.bitwise_or)):
        bad2 = F[op(idx[:, None], idx[None, :])] != op(F[:, None], F[None, :])
        if bad2.any():
            a, b = (int(v) for v in np.argwhere(bad2)[0])
            return (name, m.label(a), m.label(b))
    if m.size <= size_guard(guard):
        # arbitrary joins: every subset of the algebra
        src = sb.subset_unions(list(range(m.size)))
        img = sb.subset_unions([int(v) for v in F])
        bad3 = np.flatnonzero(F[src] != img)
        if bad3.size:
            return ("f(V S)=V f[S]", int(bad3[0]))
    return None


def check_mt_morphism(
    f: StructureMap | Sequence[int],
    m: MTAlgebra,
    n: MTAlgebra,
    strict: bool = True,
    guard: int | None = None,
) -> MTMorphismCheckResult:
    table = as_table(f)
    if len(table) != m.size or any(not 0 <= v < n.size for v in table):
        raise ValidationError("map is not a total function between the algebras")
    F = np.array(table, dtype=np.int64)
    smap = f if isinstance(f, StructureMap) else StructureMap("mt", table)
    fail = _boolean_hom_failure(F, m, n, guard)
    f_star = left_adjoint(table, m, n)
    if fail is not None:
        if strict:
            raise NotBooleanHom(f"not a complete boolean homomorphism ({fail[0]})", witness=fail)
        return MTMorphismCheckResult(smap, False, False, False, f_star, fail)
    for x in range(n.size):
        for a in range(m.size):
            if (f_star[x] & ~a == 0) != (x & ~table[a] == 0):
                raise BijectionFailure("left adjoint fails the adjunction", witness=(n.label(x), m.label(a)))
    bad = [a for a in range(m.size) if table[m.box[a]] & ~n.box[table[a]]]
    if bad:
        w = ("f(box a) <= box f(a)", m.label(bad[0]))
        if strict:
            raise NotMTMorphism(f"f(box a) not below box f(a) at {m.label(bad[0])}", witness=w)
        return MTMorphismCheckResult(smap, True, False, False, f_star, w)
    ks_m = m.classes.compact_saturated
    proper_ks = all(table[a] in n.classes.compact_saturated for a in ks_m)
    proper_k = all(table[a] in n.classes.compact for a in ks_m)
    if proper_ks != proper_k:
        raise OracleDisagreement("properness via KS and via K disagree")
    return MTMorphismCheckResult(
        StructureMap("mt", table, proper_ks), True, True, proper_ks, f_star
    )


def compose(f: Sequence[int], g: Sequence[int]) -> tuple[int, ...]:
    """``g . f``: apply ``f`` first."""
    return tuple(g[v] for v in f)
