"""Isomorphism deciders for finite MT-algebras, spaces and lattices."""

from __future__ import annotations

from typing import Sequence

import networkx as nx
import numpy as np

from ._subsets import bits, mask_of
from .order import FiniteLattice


def _spec(opens: frozenset[int] | set[int], n: int) -> np.ndarray:
    """Specialization preorder of a topology on ``n`` points given by its opens."""
    leq = np.ones((n, n), dtype=bool)
    for u in opens:
        for a in bits(u):
            for b in range(n):
                if not u >> b & 1:
                    leq[a, b] = False
    return leq


def _signature(leq: np.ndarray, opens, x: int) -> tuple[int, int, int]:
    return (int(leq[x].sum()), int(leq[:, x].sum()), sum(1 for u in opens if u >> x & 1))


def image_of(perm: Sequence[int], mask: int) -> int:
    return mask_of(perm[p] for p in bits(mask))


def find_topology_iso(n: int, opens_a, m: int, opens_b) -> tuple[int, ...] | None:
    """A bijection of points carrying one open family onto the other, or None.

    Backtracking over points, pruned by degree signatures and by requiring
    the partial map to preserve and reflect the specialization preorder.
    The final candidate is confirmed on the full open family.
    """
    opens_a, opens_b = frozenset(opens_a), frozenset(opens_b)
    if n != m or len(opens_a) != len(opens_b):
        return None
    la, lb = _spec(opens_a, n), _spec(opens_b, n)
    sig_a = [_signature(la, opens_a, x) for x in range(n)]
    sig_b = [_signature(lb, opens_b, y) for y in range(n)]
    if sorted(sig_a) != sorted(sig_b):
        return None
    perm = [-1] * n
    used = [False] * n

    def extend(x: int) -> tuple[int, ...] | None:
        if x == n:
            cand = tuple(perm)
            if {image_of(cand, u) for u in opens_a} == opens_b:
                return cand
            return None
        for y in range(n):
            if used[y] or sig_b[y] != sig_a[x]:
                continue
            if any(la[x, z] != lb[y, perm[z]] or la[z, x] != lb[perm[z], y] for z in range(x)):
                continue
            perm[x] = y
            used[y] = True
            found = extend(x + 1)
            if found is not None:
                return found
            used[y] = False
        perm[x] = -1
        return None

    return extend(0)


def find_mt_iso(m1, m2) -> tuple[int, ...] | None:
    """Atom bijection realising an MT-isomorphism, or None."""
    return find_topology_iso(m1.n, m1.opens, m2.n, m2.opens)


def find_homeomorphism(x, y) -> tuple[int, ...] | None:
    return find_topology_iso(x.size, x.opens, y.size, y.opens)


def hasse_graph(l: FiniteLattice) -> nx.DiGraph:
    g = nx.DiGraph()
    g.add_nodes_from(range(l.size))
    g.add_edges_from(l.poset.covers())
    return g


def find_lattice_iso(l1: FiniteLattice, l2: FiniteLattice) -> dict[int, int] | None:
    """Order isomorphism between two finite lattices via their Hasse diagrams."""
    if l1.size != l2.size:
        return None
    matcher = nx.algorithms.isomorphism.DiGraphMatcher(hasse_graph(l1), hasse_graph(l2))
    for mapping in matcher.isomorphisms_iter():
        return dict(mapping)
    return None


def lattices_isomorphic(l1: FiniteLattice, l2: FiniteLattice) -> bool:
    return find_lattice_iso(l1, l2) is not None


def is_order_iso(table: Sequence[int], l1: FiniteLattice, l2: FiniteLattice) -> bool:
    """Is ``table`` a bijection that preserves and reflects the order?"""
    t = np.asarray(table, dtype=np.int64)
    if len(t) != l1.size or sorted(t.tolist()) != list(range(l2.size)):
        return False
    return bool(np.array_equal(l1.leq, l2.leq[t[:, None], t[None, :]]))
