"""Deterministic corpus generation: topologies, preorders, distributive lattices,
boolean algebras and MT tables."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import networkx as nx
import numpy as np

from ._subsets import bits
from .config import require_within_guard
from .documents import Document
from .errors import OracleDisagreement
from .frames import Frame
from .iso import find_lattice_iso
from .mt import mt_from_table
from .order import FiniteLattice, FinitePoset, boolean_powerset, downset_lattice, transitive_closure
from .spaces import FiniteSpace, from_preorder

GEN_KINDS = ("topology", "preorder", "dlat", "boolean", "mt_table")
EXHAUSTIVE_TOPOLOGY_MAX = 4


def point_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


def all_preorders(n: int) -> list[np.ndarray]:
    """Every preorder on ``n`` labelled points, as boolean tables."""
    off = [(a, b) for a in range(n) for b in range(n) if a != b]
    out = []
    for mask in range(1 << len(off)):
        rel = np.eye(n, dtype=bool)
        for i in bits(mask):
            rel[off[i]] = True
        if np.array_equal(transitive_closure(rel), rel):
            out.append(rel)
    return out


def topologies_bruteforce(n: int) -> list[frozenset[int]]:
    """Every family of subsets of ``n`` points that is a topology; checks ``2**(2**n - 2)`` families."""
    full = (1 << n) - 1
    middle = [s for s in range(1 << n) if s not in (0, full)]
    out = []
    for mask in range(1 << len(middle)):
        fam = {0, full} | {middle[i] for i in bits(mask)}
        if all(a | b in fam and a & b in fam for a in fam for b in fam):
            out.append(frozenset(fam))
    return out


@lru_cache(maxsize=None)
def all_topologies(n: int) -> tuple[FiniteSpace, ...]:
    """All topologies on ``n`` labelled points, via Alexandrov topologies of preorders.

    For ``n <= 4`` the list is compared against a brute-force scan of all
    set families (16384 of them at four points).
    """
    labels = point_labels(n)
    spaces = tuple(from_preorder(labels, rel) for rel in all_preorders(n))
    if n <= 4:
        brute = set(topologies_bruteforce(n))
        if brute != {s.opens for s in spaces}:
            raise OracleDisagreement(f"topology enumeration on {n} points disagrees with brute force")
    return spaces


def random_preorder(n: int, rng: random.Random) -> np.ndarray:
    density = rng.uniform(0.05, 0.5)
    rel = np.eye(n, dtype=bool)
    for a in range(n):
        for b in range(n):
            if a != b and rng.random() < density:
                rel[a, b] = True
    return transitive_closure(rel)


def random_topology(n: int, rng: random.Random) -> FiniteSpace:
    return from_preorder(point_labels(n), random_preorder(n, rng))


def random_poset(n: int, rng: random.Random) -> FinitePoset:
    """Random order: a random DAG along a random linear order, then closed."""
    density = rng.uniform(0.1, 0.6)
    perm = list(range(n))
    rng.shuffle(perm)
    rel = np.eye(n, dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rel[perm[i], perm[j]] = True
    return FinitePoset(tuple(f"j{i}" for i in range(n)), transitive_closure(rel))


def _poset_graph(leq: np.ndarray) -> nx.DiGraph:
    g = nx.DiGraph()
    n = leq.shape[0]
    g.add_nodes_from(range(n))
    g.add_edges_from((a, b) for a in range(n) for b in range(n) if a != b and leq[a, b])
    return g


def _downset_count(leq: np.ndarray) -> int:
    n = leq.shape[0]
    return sum(
        1 for m in range(1 << n) if all(not leq[b, a] or m >> b & 1 for a in bits(m) for b in range(n))
    )


@lru_cache(maxsize=None)
def distributive_lattices_upto(max_size: int) -> tuple[FiniteLattice, ...]:
    """Every distributive lattice with at most ``max_size`` elements, up to isomorphism.

    Each is the downset lattice of its poset of join-irreducibles.  Posets
    are grown by adding a new maximal element above a chosen downset of
    the current poset, pruned once the number of downsets exceeds the bound,
    and deduplicated up to isomorphism.
    """
    level = [np.ones((0, 0), dtype=bool)]
    found: list[np.ndarray] = list(level)
    while level:
        nxt: list[np.ndarray] = []
        graphs: list[nx.DiGraph] = []
        for leq in level:
            n = leq.shape[0]
            for below in range(1 << n):
                ids = bits(below)
                if any(leq[b, a] and not below >> b & 1 for a in ids for b in range(n)):
                    continue  # not a downset
                new = np.zeros((n + 1, n + 1), dtype=bool)
                new[:n, :n] = leq
                new[n, n] = True
                for a in ids:
                    new[a, n] = True
                if _downset_count(new) > max_size:
                    continue
                g = _poset_graph(new)
                if any(nx.is_isomorphic(g, h) for h in graphs):
                    continue
                graphs.append(g)
                nxt.append(new)
        found.extend(nxt)
        level = nxt
    lattices = []
    for leq in found:
        p = FinitePoset(tuple(f"j{i}" for i in range(leq.shape[0])), leq)
        lat = downset_lattice(p)
        if any(l.size == lat.size and find_lattice_iso(l, lat) is not None for l in lattices):
            raise OracleDisagreement("non-isomorphic posets gave isomorphic downset lattices")
        lattices.append(lat)
    return tuple(sorted(lattices, key=lambda l: l.size))


def generate(kind: str, size: int, seed: int = 0, count: int = 1, guard: int | None = None) -> list[Document]:
    """Documents for ``(kind, size, seed)``; the same arguments always give the same documents.

    ``topology`` with ``size <= 4`` is exhaustive (every labelled topology,
    ignoring ``seed`` and ``count``); above that ``count`` random ones are drawn.
    """
    if kind not in GEN_KINDS:
        raise ValueError(f"unknown generator kind {kind!r}")
    if size < 0:
        raise ValueError("size must be non-negative")
    require_within_guard(size, f"{kind} generation", guard)
    rng = random.Random(seed)
    if kind == "topology":
        if size <= EXHAUSTIVE_TOPOLOGY_MAX:
            return [Document("space", x, f"topology-{size}-{i}") for i, x in enumerate(all_topologies(size))]
        return [Document("space", random_topology(size, rng), f"topology-{size}-s{seed}-{i}") for i in range(count)]
    if kind == "preorder":
        return [Document("space", random_topology(size, rng), f"preorder-{size}-s{seed}-{i}") for i in range(count)]
    if kind == "boolean":
        labels = tuple(f"a{i}" for i in range(size))
        return [Document("boolean", boolean_powerset(size, labels), f"boolean-{size}")]
    if kind == "dlat":
        out = []
        for i in range(count):
            lat = downset_lattice(random_poset(size, rng))
            out.append(Document("frame", Frame(lat), f"dlat-{size}-s{seed}-{i}"))
        return out
    out = []
    for i in range(count):
        x = random_topology(size, rng)
        box = [x.interior(a) for a in range(1 << size)]
        out.append(Document("mt", mt_from_table(size, box, None, x.points), f"mt-{size}-s{seed}-{i}"))
    return out


def corpus_spaces(max_points: int = 4) -> list[FiniteSpace]:
    """Exhaustive corpus: every topology on 0..max_points labelled points."""
    return [x for n in range(max_points + 1) for x in all_topologies(n)]


def random_spaces(lo: int, hi: int, count: int, seed: int) -> list[FiniteSpace]:
    rng = random.Random(seed)
    return [random_topology(rng.randint(lo, hi), rng) for _ in range(count)]


def random_point_maps(x: FiniteSpace, y: FiniteSpace, rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.randrange(y.size) for _ in range(x.size))


def all_point_maps(n: int, m: int):
    return itertools.product(range(m), repeat=n)


def space_key(x: FiniteSpace) -> tuple:
    return (x.size, tuple(sorted(x.opens)))

