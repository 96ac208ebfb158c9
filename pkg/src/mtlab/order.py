"""Finite posets, lattices and boolean algebras.

Elements are dense integer indices into ``elements``; labels are metadata.
Orders are stored as boolean ``n x n`` tables with ``leq[a, b]`` meaning
``a <= b``, and meets/joins as integer tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from ._subsets import bits, directed_masks, mask_of, subset_fold
from .checks import Check
from .config import require_within_guard
from .errors import (
    DuplicateLabel,
    NotALattice,
    NotAntisymmetric,
    NotBooleanAlgebra,
    NotDistributive,
    ValidationError,
)


def subset_label(labels: Sequence[str], mask: int) -> str:
    return "{" + ",".join(labels[i] for i in bits(mask)) + "}"


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    r = rel.copy()
    for k in range(r.shape[0]):
        r |= np.outer(r[:, k], r[k, :])
    return r


@dataclass(frozen=True, eq=False)
class FinitePoset:
    elements: tuple[str, ...]
    leq: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "leq", _frozen(np.asarray(self.leq, dtype=bool)))

    @property
    def size(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.elements)}

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[a, b])

    def down(self, a: int) -> list[int]:
        return np.flatnonzero(self.leq[:, a]).tolist()

    def up(self, a: int) -> list[int]:
        return np.flatnonzero(self.leq[a, :]).tolist()

    def down_mask(self, a: int) -> int:
        return mask_of(self.down(a))

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(a, b)`` with ``a < b`` and nothing strictly between."""
        strict = self.leq & ~np.eye(self.size, dtype=bool)
        two_step = (strict.astype(np.int64) @ strict.astype(np.int64)) > 0
        cov = strict & ~two_step
        return [(int(a), int(b)) for a, b in zip(*np.nonzero(cov))]


def poset_from_relation(elements: Sequence[str], leq: np.ndarray) -> FinitePoset:
    """Wrap a relation that must already be a partial order."""
    elements = tuple(elements)
    leq = np.asarray(leq, dtype=bool)
    n = len(elements)
    if len(set(elements)) != n:
        dup = next(x for x in elements if elements.count(x) > 1)
        raise DuplicateLabel(f"duplicate element label {dup!r}", witness=dup)
    if leq.shape != (n, n):
        raise ValidationError(f"order table has shape {leq.shape}, expected {(n, n)}")
    if n and not leq.diagonal().all():
        a = int(np.flatnonzero(~leq.diagonal())[0])
        raise ValidationError(f"order is not reflexive at {elements[a]!r}", witness=elements[a])
    anti = leq & leq.T & ~np.eye(n, dtype=bool)
    if anti.any():
        a, b = (int(x) for x in np.argwhere(anti)[0])
        raise NotAntisymmetric(
            f"{elements[a]!r} <= {elements[b]!r} <= {elements[a]!r}",
            witness=(elements[a], elements[b]),
        )
    if not np.array_equal(transitive_closure(leq), leq):
        raise ValidationError("order is not transitive")
    return FinitePoset(elements, leq)


def validate_poset(elements: Sequence[str], pairs: Iterable[tuple[str, str]]) -> FinitePoset:
    """Build a poset from labels and ``(a, b)`` pairs meaning ``a <= b``.

    The reflexive-transitive closure of the pairs is taken; a cycle through
    two distinct elements raises ``NotAntisymmetric`` with the offending pair.
    """
    elements = tuple(elements)
    seen: set[str] = set()
    for x in elements:
        if x in seen:
            raise DuplicateLabel(f"duplicate element label {x!r}", witness=x)
        seen.add(x)
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    rel = np.eye(n, dtype=bool)
    for a, b in pairs:
        for x in (a, b):
            if x not in index:
                raise ValidationError(f"order pair mentions unknown element {x!r}", witness=x)
        rel[index[a], index[b]] = True
    rel = transitive_closure(rel)
    anti = rel & rel.T & ~np.eye(n, dtype=bool)
    if anti.any():
        a, b = (int(x) for x in np.argwhere(anti)[0])
        raise NotAntisymmetric(
            f"cycle between {elements[a]!r} and {elements[b]!r}",
            witness=(elements[a], elements[b]),
        )
    return FinitePoset(elements, rel)


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    poset: FinitePoset
    meet: np.ndarray
    join: np.ndarray
    bottom: int
    top: int

    def __post_init__(self):
        object.__setattr__(self, "meet", _frozen(np.asarray(self.meet, dtype=np.int64)))
        object.__setattr__(self, "join", _frozen(np.asarray(self.join, dtype=np.int64)))

    @property
    def elements(self) -> tuple[str, ...]:
        return self.poset.elements

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq

    @property
    def size(self) -> int:
        return self.poset.size

    def le(self, a: int, b: int) -> bool:
        return bool(self.poset.leq[a, b])

    def meet_all(self, xs: Iterable[int]) -> int:
        acc = self.top
        for x in xs:
            acc = int(self.meet[acc, x])
        return acc

    def join_all(self, xs: Iterable[int]) -> int:
        acc = self.bottom
        for x in xs:
            acc = int(self.join[acc, x])
        return acc

    def up(self, a: int) -> list[int]:
        return self.poset.up(a)

    def down(self, a: int) -> list[int]:
        return self.poset.down(a)


def lattice_structure(p: FinitePoset) -> FiniteLattice:
    """Tabulate greatest lower and least upper bounds; fail on the first pair lacking one."""
    n = p.size
    leq = p.leq
    if n == 0:
        raise NotALattice("empty poset has no top or bottom", witness=None)
    li = leq.astype(np.int64)

    def bounds(rel: np.ndarray, rel_i: np.ndarray, what: str) -> np.ndarray:
        # common[x, a, b]: x is a lower (upper) bound of a and b
        common = rel[:, :, None] & rel[:, None, :]
        size = common.sum(axis=0)
        # dominated[g, a, b]: how many common bounds x satisfy x <= g (resp. g <= x)
        dominated = np.einsum("xg,xab->gab", rel_i, common.astype(np.int64))
        best = common & (dominated == size[None, :, :])
        found = best.any(axis=0)
        if not found.all():
            a, b = (int(x) for x in np.argwhere(~found)[0])
            raise NotALattice(
                f"{p.elements[a]!r} and {p.elements[b]!r} have no {what}",
                witness=(p.elements[a], p.elements[b]),
            )
        return best.argmax(axis=0)

    meet = bounds(leq, li, "greatest lower bound")
    join = bounds(leq.T, li.T, "least upper bound")
    bottom = [i for i in range(n) if leq[i].all()]
    top = [i for i in range(n) if leq[:, i].all()]
    return FiniteLattice(p, meet, join, bottom[0], top[0])


def lattice_of_sets(masks: Sequence[int], labels: Sequence[str] | None = None) -> FiniteLattice:
    """Lattice of a family of sets (bitmasks) closed under union and intersection."""
    masks = [int(m) for m in masks]
    if labels is None:
        labels = [str(m) for m in masks]
    pos = {m: i for i, m in enumerate(masks)}
    if len(pos) != len(masks):
        raise DuplicateLabel("repeated set in family")
    n = len(masks)
    arr = np.array(masks, dtype=np.int64)
    leq = (arr[:, None] & ~arr[None, :]) == 0
    meet = np.empty((n, n), dtype=np.int64)
    join = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            try:
                meet[i, j] = pos[a & b]
                join[i, j] = pos[a | b]
            except KeyError:
                raise NotALattice(
                    f"family not closed under union/intersection at {labels[i]}, {labels[j]}",
                    witness=(labels[i], labels[j]),
                ) from None
    lo, hi = min(masks, key=lambda m: m.bit_count()), max(masks, key=lambda m: m.bit_count())
    if any(lo & ~m for m in masks) or any(m & ~hi for m in masks):
        raise NotALattice("family has no least or greatest set")
    return FiniteLattice(FinitePoset(tuple(labels), leq), meet, join, pos[lo], pos[hi])


def powerset_lattice(n: int, atom_labels: Sequence[str] | None = None) -> FiniteLattice:
    """Powerset of ``n`` atoms; element index equals its bitmask."""
    if atom_labels is None:
        atom_labels = [str(i) for i in range(n)]
    idx = np.arange(1 << n, dtype=np.int64)
    meet = idx[:, None] & idx[None, :]
    join = idx[:, None] | idx[None, :]
    leq = meet == idx[:, None]
    labels = tuple(subset_label(atom_labels, m) for m in range(1 << n))
    return FiniteLattice(FinitePoset(labels, leq), meet, join, 0, (1 << n) - 1)


def is_distributive(l: FiniteLattice) -> Check:
    """Scan every triple for ``a ^ (b v c) = (a ^ b) v (a ^ c)``."""
    m, j = l.meet, l.join
    lhs = m[:, j]  # lhs[a, b, c] = a ^ (b v c)
    rhs = j[m[:, :, None], m[:, None, :]]  # rhs[a, b, c] = (a ^ b) v (a ^ c)
    bad = lhs != rhs
    if bad.any():
        a, b, c = (int(x) for x in np.argwhere(bad)[0])
        return Check.fail("distributive law", (l.elements[a], l.elements[b], l.elements[c]))
    return Check.ok()


@dataclass(frozen=True, eq=False)
class FiniteBooleanAlgebra:
    lattice: FiniteLattice
    neg: np.ndarray
    atom_list: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "neg", _frozen(np.asarray(self.neg, dtype=np.int64)))

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def elements(self) -> tuple[str, ...]:
        return self.lattice.elements

    def atoms_below(self, a: int) -> int:
        """Bitmask over ``atom_list`` positions of the atoms below ``a``."""
        return mask_of(i for i, x in enumerate(self.atom_list) if self.lattice.leq[x, a])


def validate_boolean(l: FiniteLattice) -> FiniteBooleanAlgebra:
    dist = is_distributive(l)
    if not dist:
        raise NotBooleanAlgebra(f"not distributive at {dist.witness}", witness=dist.witness)
    neg = np.empty(l.size, dtype=np.int64)
    for a in range(l.size):
        comp = np.flatnonzero((l.meet[a] == l.bottom) & (l.join[a] == l.top))
        if comp.size == 0:
            raise NotBooleanAlgebra(f"{l.elements[a]!r} has no complement", witness=l.elements[a])
        neg[a] = comp[0]
    b = FiniteBooleanAlgebra(l, neg, ())
    return FiniteBooleanAlgebra(l, neg, tuple(sorted(atoms(b))))


def boolean_powerset(n: int, atom_labels: Sequence[str] | None = None) -> FiniteBooleanAlgebra:
    l = powerset_lattice(n, atom_labels)
    full = (1 << n) - 1
    neg = full ^ np.arange(1 << n, dtype=np.int64)
    return FiniteBooleanAlgebra(l, neg, tuple(1 << i for i in range(n)))


def join_irreducibles(l: FiniteLattice) -> frozenset[int]:
    """``j != 0`` such that ``j = a v b`` forces ``j = a`` or ``j = b``."""
    out = []
    idx = np.arange(l.size)
    for j in range(l.size):
        if j == l.bottom:
            continue
        split = (l.join == j) & (idx[:, None] != j) & (idx[None, :] != j)
        if not split.any():
            out.append(j)
    return frozenset(out)


def minimal_nonzero(l: FiniteLattice) -> frozenset[int]:
    strict = l.leq & ~np.eye(l.size, dtype=bool)
    out = []
    for a in range(l.size):
        if a == l.bottom:
            continue
        below = np.flatnonzero(strict[:, a])
        if all(x == l.bottom for x in below):
            out.append(a)
    return frozenset(out)


def atoms(b: FiniteBooleanAlgebra | FiniteLattice) -> frozenset[int]:
    l = b.lattice if isinstance(b, FiniteBooleanAlgebra) else b
    return minimal_nonzero(l)


def downsets(p: FinitePoset) -> list[int]:
    """All downsets of ``p`` as bitmasks, sorted by (size, mask)."""
    found = {0}
    frontier = [0]
    principal = [p.down_mask(x) for x in range(p.size)]
    while frontier:
        nxt = []
        for d in frontier:
            for pd in principal:
                u = d | pd
                if u not in found:
                    found.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(found, key=lambda m: (m.bit_count(), m))


def downset_lattice(p: FinitePoset) -> FiniteLattice:
    ds = downsets(p)
    return lattice_of_sets(ds, [subset_label(p.elements, d) for d in ds])


@dataclass(frozen=True, eq=False)
class BirkhoffRepr:
    """Finite distributive lattice embedded in the powerset of its join-irreducibles."""

    base: FiniteLattice
    jposet: FinitePoset
    jelems: tuple[int, ...]
    embed: tuple[int, ...]

    @cached_property
    def free_boolean(self) -> FiniteBooleanAlgebra:
        return boolean_powerset(len(self.jelems), self.jposet.elements)


def birkhoff(l: FiniteLattice) -> BirkhoffRepr:
    dist = is_distributive(l)
    if not dist:
        raise NotDistributive(f"distributive law fails at {dist.witness}", witness=dist.witness)
    js = tuple(sorted(join_irreducibles(l)))
    sub = l.leq[np.ix_(js, js)]
    jposet = FinitePoset(tuple(l.elements[j] for j in js), sub)
    embed = tuple(mask_of(i for i, j in enumerate(js) if l.leq[j, a]) for a in range(l.size))
    return BirkhoffRepr(l, jposet, js, embed)


def macneille_completion(p: FinitePoset) -> tuple[FiniteLattice, tuple[int, ...]]:
    """Lattice of cuts ``A = (A^u)^l`` with the embedding ``x -> down(x)``.

    Cuts of a finite poset are exactly the intersections of principal
    downsets, the empty intersection being the whole poset.
    """
    full = (1 << p.size) - 1
    principal = [p.down_mask(x) for x in range(p.size)]
    cuts = {full}
    for pd in principal:
        cuts |= {c & pd for c in cuts}
    ordered = sorted(cuts, key=lambda m: (m.bit_count(), m))
    named = {pd: p.elements[x] for x, pd in enumerate(principal)}
    labels = [named.get(c, "cut" + subset_label(p.elements, c)) for c in ordered]
    # cuts are closed under intersection but joins are not unions
    arr = np.array(ordered, dtype=np.int64 if p.size < 63 else object)
    lat = lattice_structure(FinitePoset(tuple(labels), (arr[:, None] & ~arr[None, :]) == 0))
    pos = {c: i for i, c in enumerate(ordered)}
    return lat, tuple(pos[pd] for pd in principal)


def pseudocomplement(l: FiniteLattice, c: int) -> int:
    return l.join_all(x for x in range(l.size) if l.meet[c, x] == l.bottom)


def complemented_elements(l: FiniteLattice) -> frozenset[int]:
    return frozenset(c for c in range(l.size) if l.join[c, pseudocomplement(l, c)] == l.top)


def up_set(l: FiniteLattice, g: int) -> frozenset[int]:
    return frozenset(l.up(g))


def is_filter(l: FiniteLattice, members: frozenset[int]) -> bool:
    if l.top not in members:
        return False
    for a in members:
        if any(b not in members for b in l.up(a)):
            return False
        if any(int(l.meet[a, b]) not in members for b in members):
            return False
    return True


def lattice_filters(l: FiniteLattice) -> list[frozenset[int]]:
    """Filters of a finite lattice; each is principal, generated by its meet.

    Improper filters (containing the bottom) are included.
    """
    out = []
    for g in range(l.size):
        f = up_set(l, g)
        if not is_filter(l, f):
            raise AssertionError(f"principal up-set of {l.elements[g]!r} is not a filter")
        out.append(f)
    return out


def lattice_filters_bruteforce(l: FiniteLattice, guard: int | None = None) -> list[frozenset[int]]:
    """Every subset of ``l`` that is a filter, found by scanning all ``2**|l|`` subsets."""
    require_within_guard(l.size, "filter enumeration", guard)
    masks = np.arange(1 << l.size, dtype=np.int64)
    member = [((masks >> i) & 1).astype(bool) for i in range(l.size)]
    ok = member[l.top].copy()
    for a in range(l.size):
        up = mask_of(l.up(a))
        ok &= ~member[a] | ((masks & up) == up)
        for b in range(a + 1, l.size):
            ok &= ~(member[a] & member[b]) | member[int(l.meet[a, b])]
    return [frozenset(bits(int(m))) for m in np.flatnonzero(ok)]


def scott_open_filter_flags(
    l: FiniteLattice, filters: Sequence[frozenset[int]], guard: int | None = None
) -> list[bool]:
    """Directed-family definition: ``V D in F`` must imply ``D`` meets ``F``."""
    require_within_guard(l.size, "Scott-open filter oracle", guard)
    directed = directed_masks(l.leq)
    joins = subset_fold(list(range(l.size)), lambda acc, v: l.join[acc, v], l.bottom)
    masks = np.arange(1 << l.size, dtype=np.int64)
    flags = []
    for f in filters:
        in_f = np.zeros(l.size, dtype=bool)
        in_f[list(f)] = True
        fmask = mask_of(f)
        bad = directed & in_f[joins] & ((masks & fmask) == 0)
        flags.append(not bad.any())
    return flags
