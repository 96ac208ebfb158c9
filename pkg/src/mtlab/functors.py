"""Constructions between spaces, frames, boolean algebras and MT-algebras.

Covers the object and morphism parts of P, at, O, pt, the boolean extension
of a frame, the canonical extension of a boolean algebra, the canonical maps
eta/epsilon/zeta/delta/theta, and the round-trip checkers built on them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._subsets import bits, mask_of
from .checks import Check
from .errors import BijectionFailure, HypothesisNotMet, NotBooleanHom, NotMTMorphism, NotSober
from .frames import Frame, FramePointSet, points, scott_open_filters, validate_frame
from .iso import find_lattice_iso, find_mt_iso, find_topology_iso, is_order_iso
from .maps import StructureMap, as_table
from .mt import (
    MTAlgebra,
    check_mt_morphism,
    compactness_check,
    enumerate_filters,
    left_adjoint,
    mt_from_table,
    separation_check,
    validate_mt,
)
from .order import (
    FiniteBooleanAlgebra,
    FiniteLattice,
    birkhoff,
    boolean_powerset,
    lattice_filters,
    lattice_of_sets,
    macneille_completion,
    subset_label,
)
from .spaces import (
    FiniteSpace,
    check_map,
    compact_saturated,
    is_homeomorphism,
    preimage,
    validate_space,
)

ROUNDTRIP_TARGETS = (
    "t_half_iso",
    "hl_unit",
    "hm_frame",
    "hm_space",
    "eta_proper",
    "eta_scott",
    "eta_ks",
    "stone_path",
)
CANONICAL_KINDS = ("eta", "epsilon", "zeta", "delta", "theta")


# P: spaces to MT-algebras


def powerset_mt(x: FiniteSpace) -> MTAlgebra:
    return validate_mt(x)


def powerset_mt_map(f: Sequence[int], x: FiniteSpace, y: FiniteSpace) -> StructureMap:
    """``P(f): P(y) -> P(x)``, ``A -> f^-1(A)``, for a continuous ``f: x -> y``."""
    f = tuple(int(q) for q in f)
    cm = check_map(f, x, y)
    if not cm.is_continuous:
        raise NotMTMorphism("point map is not continuous", witness=cm.witness)
    table = tuple(preimage(f, a) for a in range(1 << y.size))
    res = check_mt_morphism(table, powerset_mt(y), powerset_mt(x))
    return res.map


# at: MT-algebras to spaces


def atoms_space(m: MTAlgebra) -> FiniteSpace:
    """Points are the atoms; the opens are ``eta[O(M)]``, i.e. the open bitmasks."""
    return validate_space(m.atom_labels, sorted(m.opens))


def atoms_map(f: StructureMap | Sequence[int], m: MTAlgebra, n: MTAlgebra) -> tuple[int, ...]:
    """``at(f): at(N) -> at(M)``, ``x -> f*(x)``, for an MT-morphism ``f: M -> N``."""
    res = check_mt_morphism(f, m, n)
    out = []
    for y in n.atoms:
        img = res.left_adjoint[y]
        if img.bit_count() != 1:
            raise NotMTMorphism("left adjoint does not send atoms to atoms", witness=n.label(y))
        out.append(img.bit_length() - 1)
    cm = check_map(out, atoms_space(n), atoms_space(m))
    if not cm.is_continuous:
        raise NotMTMorphism("at(f) is not continuous", witness=cm.witness)
    return tuple(out)


# O: MT-algebras to frames


def opens_frame(m: MTAlgebra) -> Frame:
    return Frame(m.opens_lattice)


def opens_map(f: StructureMap | Sequence[int], m: MTAlgebra, n: MTAlgebra) -> StructureMap:
    """Restriction of an MT-morphism to the opens, as a frame-element table."""
    table = as_table(f)
    pos = {u: i for i, u in enumerate(n.sorted_opens)}
    out = []
    for u in m.sorted_opens:
        if table[u] not in pos:
            raise NotMTMorphism("open element not sent to an open element", witness=m.label(u))
        out.append(pos[table[u]])
    return StructureMap("frame", out)


# pt: frames to spaces


def points_space(f: Frame | FiniteLattice) -> FiniteSpace:
    if isinstance(f, FiniteLattice):
        f = validate_frame(f)
    return points(f).space


# boolean extension of a frame


def _as_frame(l) -> Frame:
    if isinstance(l, Frame):
        return l
    return validate_frame(l)


def bool_ext_mt(l: Frame | FiniteLattice) -> MTAlgebra:
    """MT-algebra whose opens are ``l``.

    ``l`` is embedded in the powerset of its join-irreducibles; the box is
    the right adjoint of that inclusion, ``box x = V {e(a) | e(a) <= x}``.
    The result is then passed through the MacNeille completion and the
    lower extension ``box x = V {box a | a <= x}``; both are the identity
    here but the path is taken literally.  Finally ``O(result) = l`` is
    confirmed up to isomorphism.
    """
    frame = _as_frame(l)
    rep = birkhoff(frame.lattice)
    n = len(rep.jelems)
    b = boolean_powerset(n, rep.jposet.elements)
    images = sorted(set(rep.embed))
    box = [mask_of_join(e for e in images if e & ~x == 0) for x in range(b.size)]

    completion, emb = macneille_completion(b.lattice.poset)
    if sorted(emb) != list(range(completion.size)):
        raise BijectionFailure("MacNeille embedding of a finite boolean algebra is not onto")
    back = {c: x for x, c in enumerate(emb)}
    lower = []
    for c in range(completion.size):
        lower.append(completion.join_all(emb[box[a]] for a in range(b.size) if completion.leq[emb[a], c]))
    table = [back[lower[emb[x]]] for x in range(b.size)]

    labels = tuple(subset_label(rep.jposet.elements, x) for x in range(b.size))
    m = mt_from_table(n, table, labels, rep.jposet.elements)
    if find_lattice_iso(m.opens_lattice, frame.lattice) is None:
        raise BijectionFailure("opens of the boolean extension are not isomorphic to the frame")
    return m


def mask_of_join(masks) -> int:
    out = 0
    for x in masks:
        out |= x
    return out


# canonical extension of a boolean algebra


def check_boolean_hom(h: Sequence[int], b1: FiniteBooleanAlgebra, b2: FiniteBooleanAlgebra) -> Check:
    t = np.asarray(as_table(h), dtype=np.int64)
    l1, l2 = b1.lattice, b2.lattice
    if t.shape != (b1.size,) or (t < 0).any() or (t >= b2.size).any():
        return Check.fail("not a total map", None)
    if t[l1.bottom] != l2.bottom or t[l1.top] != l2.top:
        return Check.fail("bounds not preserved", None)
    if (t[b1.neg] != b2.neg[t]).any():
        a = int(np.flatnonzero(t[b1.neg] != b2.neg[t])[0])
        return Check.fail("negation not preserved", b1.elements[a])
    for name, o1, o2 in (("meet", l1.meet, l2.meet), ("join", l1.join, l2.join)):
        bad = t[o1] != o2[t[:, None], t[None, :]]
        if bad.any():
            a, c = (int(v) for v in np.argwhere(bad)[0])
            return Check.fail(f"{name} not preserved", (b1.elements[a], b1.elements[c]))
    return Check.ok()


def ultrafilters(b: FiniteBooleanAlgebra) -> list[frozenset[int]]:
    """Proper filters containing ``a`` or ``not a`` for every ``a``."""
    l = b.lattice
    out = []
    for f in lattice_filters(l):
        if l.bottom in f:
            continue
        if all(a in f or int(b.neg[a]) in f for a in range(b.size)):
            out.append(f)
    return out


@dataclass(frozen=True, eq=False)
class CanonicalExtension:
    base: FiniteBooleanAlgebra
    ultrafilters: tuple[frozenset[int], ...]
    sigma: MTAlgebra
    embed: tuple[int, ...]

    @property
    def clopen_image(self) -> frozenset[int]:
        return frozenset(self.embed)


def canonical_ext(b: FiniteBooleanAlgebra) -> CanonicalExtension:
    uf = ultrafilters(b)
    k = len(uf)
    embed = tuple(mask_of(i for i, u in enumerate(uf) if a in u) for a in range(b.size))
    images = sorted(set(embed))
    box = [mask_of_join(e for e in images if e & ~x == 0) for x in range(1 << k)]
    # each ultrafilter is principal on an atom; label it by that atom
    labels = tuple("uf:" + b.elements[b.lattice.meet_all(u)] for u in uf)
    sigma = mt_from_table(k, box, None, labels)

    # lattice embedding, injective and order-reflecting
    l = b.lattice
    for a in range(b.size):
        for c in range(b.size):
            if embed[int(l.meet[a, c])] != embed[a] & embed[c] or embed[int(l.join[a, c])] != embed[a] | embed[c]:
                raise BijectionFailure("embedding does not preserve meets and joins", witness=(b.elements[a], b.elements[c]))
            if (embed[a] & ~embed[c] == 0) != bool(l.leq[a, c]):
                raise BijectionFailure("embedding does not reflect the order", witness=(b.elements[a], b.elements[c]))
    # density: every singleton is the meet of the images containing it
    for i in range(k):
        if sigma.meet_all(e for e in images if e >> i & 1) != 1 << i:
            raise BijectionFailure("extension is not dense", witness=labels[i])
    # diamond agrees with the meet of images above
    for x in range(1 << k):
        above = sigma.meet_all(e for e in images if x & ~e == 0)
        if sigma.dia(x) != above:
            raise BijectionFailure("closure differs from meet of images above", witness=sigma.label(x))
    if sigma.classes.clopen != frozenset(images):
        raise BijectionFailure("clopens differ from the image of the base")
    return CanonicalExtension(b, tuple(uf), sigma, embed)


def lift_hom(h: Sequence[int], e1: CanonicalExtension, e2: CanonicalExtension) -> StructureMap:
    """``h^sigma: B1^sigma -> B2^sigma`` for a boolean hom ``h: B1 -> B2``.

    Built from the ultrafilter map ``Uf(h): u -> h^-1[u]`` by preimage:
    ``A -> {u | h^-1[u] in A}``.  Its restriction along the embeddings is
    ``h`` itself.
    """
    h = as_table(h)
    c = check_boolean_hom(h, e1.base, e2.base)
    if not c:
        raise NotBooleanHom(f"not a boolean homomorphism ({c.reason})", witness=c.witness)
    index = {u: i for i, u in enumerate(e1.ultrafilters)}
    uf_h = []
    for u in e2.ultrafilters:
        pre = frozenset(a for a in range(e1.base.size) if h[a] in u)
        if pre not in index:
            raise BijectionFailure("preimage of an ultrafilter is not an ultrafilter")
        uf_h.append(index[pre])
    table = tuple(preimage(uf_h, a) for a in range(e1.sigma.size))
    for a in range(e1.base.size):
        if table[e1.embed[a]] != e2.embed[h[a]]:
            raise BijectionFailure("lifted map does not restrict to h", witness=e1.base.elements[a])
    res = check_mt_morphism(table, e1.sigma, e2.sigma)
    return res.map


def clopen_algebra(m: MTAlgebra) -> FiniteLattice:
    cl = sorted(m.classes.clopen, key=lambda c: (c.bit_count(), c))
    return lattice_of_sets(cl, [m.label(c) for c in cl])


def clopen_space_algebra(x: FiniteSpace) -> FiniteLattice:
    cl = sorted((u for u in x.opens if (x.full ^ u) in x.opens), key=lambda c: (c.bit_count(), c))
    return lattice_of_sets(cl, [x.label(c) for c in cl])


# canonical maps


@dataclass(frozen=True)
class CanonicalMap:
    kind: str
    table: tuple[int, ...]
    is_injective: bool
    is_surjective: bool
    is_iso: bool
    witness: object = None


def _inj_surj(table: Sequence[int], target_size: int) -> tuple[bool, bool]:
    return len(set(table)) == len(table), set(table) == set(range(target_size))


def eta_map(m: MTAlgebra) -> CanonicalMap:
    """``eta(a) = {atoms below a}``, into ``P(at(M))``; with bitmask elements this is ``a`` itself."""
    target = powerset_mt(atoms_space(m))
    table = tuple(mask_of(i for i, x in enumerate(m.atoms) if x & ~a == 0) for a in range(m.size))
    inj, surj = _inj_surj(table, target.size)
    commutes = all(table[m.box[a]] == target.box[table[a]] for a in range(m.size))
    return CanonicalMap("eta", table, inj, surj, inj and surj and commutes)


def epsilon_map(x: FiniteSpace) -> CanonicalMap:
    """``epsilon(p) = {p}``, a point of ``at(P(X))``."""
    m = powerset_mt(x)
    at = atoms_space(m)
    table = tuple(m.atoms.index(1 << p) for p in range(x.size))
    inj, surj = _inj_surj(table, at.size)
    return CanonicalMap("epsilon", table, inj, surj, is_homeomorphism(table, x, at))


def zeta_map(f: Frame | FiniteLattice) -> CanonicalMap:
    """``zeta(a) = {p | a in p}``, into the frame of opens of ``pt(L)``."""
    frame = _as_frame(f)
    pts = points(frame)
    space = pts.space
    omega = space.sorted_opens
    pos = {u: i for i, u in enumerate(omega)}
    table = tuple(pos[z] for z in pts.zeta)
    inj, surj = _inj_surj(table, len(omega))
    target = lattice_of_sets(omega)
    return CanonicalMap("zeta", table, inj, surj, is_order_iso(table, frame.lattice, target), pts.zeta_witness)


def delta_map(x: FiniteSpace) -> CanonicalMap:
    """``delta(p) = {U | p in U}``, into ``pt(Omega(X))``; -1 marks a miss."""
    omega = x.sorted_opens
    frame = Frame(lattice_of_sets(omega))
    pts = points(frame)
    index = {p: i for i, p in enumerate(pts.points)}
    table = []
    for p in range(x.size):
        filt = frozenset(i for i, u in enumerate(omega) if u >> p & 1)
        table.append(index.get(filt, -1))
    if -1 in table:
        raise BijectionFailure("delta(p) is not a point of the frame of opens", witness=x.points[table.index(-1)])
    inj, surj = _inj_surj(table, len(pts.points))
    homeo = inj and surj and is_homeomorphism(table, x, pts.space)
    return CanonicalMap("delta", tuple(table), inj, surj, homeo)


def theta_map(m: MTAlgebra) -> CanonicalMap:
    """``theta(x) = up(x) & O(M)``, from ``at(M)`` to ``pt(O(M))``; needs a sober algebra."""
    s = separation_check(m, "sober")
    if not s:
        raise NotSober(f"theta needs a sober algebra ({s.reason})", witness=s.witness)
    frame = opens_frame(m)
    pts = points(frame)
    index = {p: i for i, p in enumerate(pts.points)}
    table = []
    for x in m.atoms:
        filt = frozenset(i for i, u in enumerate(m.sorted_opens) if x & ~u == 0)
        if filt not in index:
            raise BijectionFailure("theta(x) is not a point", witness=m.label(x))
        table.append(index[filt])
    inj, surj = _inj_surj(table, len(pts.points))
    homeo = inj and surj and is_homeomorphism(table, atoms_space(m), pts.space)
    return CanonicalMap("theta", tuple(table), inj, surj, homeo)


def canonical_map(kind: str, structure) -> CanonicalMap:
    if kind == "eta":
        return eta_map(structure)
    if kind == "epsilon":
        return epsilon_map(structure)
    if kind == "zeta":
        return zeta_map(structure)
    if kind == "delta":
        return delta_map(structure)
    if kind == "theta":
        return theta_map(structure)
    raise ValueError(f"unknown canonical map {kind!r}")


def eta_naturality(f: StructureMap | Sequence[int], m: MTAlgebra, n: MTAlgebra) -> Check:
    """``eta_N(f(a)) = at(f)^-1(eta_M(a))`` for every ``a``."""
    table = as_table(f)
    atf = atoms_map(table, m, n)
    em, en = eta_map(m).table, eta_map(n).table
    for a in range(m.size):
        if en[table[a]] != preimage(atf, em[a]):
            return Check.fail("eta square does not commute", m.label(a))
    return Check.ok()


def theta_naturality(f: StructureMap | Sequence[int], m: MTAlgebra, n: MTAlgebra) -> Check:
    """``pt(O(f)) . theta_N = theta_M . at(f)`` as maps ``at(N) -> pt(O(M))``."""
    table = as_table(f)
    atf = atoms_map(table, m, n)
    tm, tn = theta_map(m).table, theta_map(n).table
    ptm, ptn = points(opens_frame(m)), points(opens_frame(n))
    of = opens_map(table, m, n).table
    index = {p: i for i, p in enumerate(ptm.points)}
    for y in range(n.n):
        p = ptn.points[tn[y]]
        pre = frozenset(i for i in range(len(of)) if of[i] in p)
        if index.get(pre) != tm[atf[y]]:
            return Check.fail("theta square does not commute", n.atom_labels[y])
    return Check.ok()


# round trips


@dataclass(frozen=True)
class RoundTrip:
    target: str
    verdict: str  # pass | fail | vacuous
    witness: object = None
    detail: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == "pass"


def _vacuous(target: str, why: Check | str) -> RoundTrip:
    if isinstance(why, Check):
        return RoundTrip(target, "vacuous", why.witness, {"hypothesis": why.reason})
    return RoundTrip(target, "vacuous", None, {"hypothesis": why})


def _result(target: str, ok: bool, witness=None, **detail) -> RoundTrip:
    return RoundTrip(target, "pass" if ok else "fail", None if ok else witness, detail)


def t_half_iso(m: MTAlgebra) -> RoundTrip:
    """T_half holds exactly when M is isomorphic to the boolean extension of O(M)."""
    th = separation_check(m, "T_half")
    iso = find_mt_iso(m, bool_ext_mt(opens_frame(m)))
    if not th and iso is None:
        return _vacuous("t_half_iso", th)
    return _result("t_half_iso", bool(th) == (iso is not None), m.label(m.top), t_half=bool(th), iso=iso is not None)


def hl_unit(m: MTAlgebra) -> RoundTrip:
    """The unit ``M -> P(pt(O(M)))``: ``a -> theta[eta(a)]`` must be an MT-isomorphism."""
    s = separation_check(m, "sober")
    if not s:
        return _vacuous("hl_unit", s)
    th = theta_map(m).table
    target = powerset_mt(points(opens_frame(m)).space)
    eta = eta_map(m).table
    unit = tuple(mask_of(th[i] for i in bits(eta[a])) for a in range(m.size))
    inj, surj = _inj_surj(unit, target.size)
    if not (inj and surj):
        return _result("hl_unit", False, "unit not bijective")
    bad = [a for a in range(m.size) if unit[m.box[a]] != target.box[unit[a]]]
    return _result("hl_unit", not bad, m.label(bad[0]) if bad else None)


def _antitone_bijection(pairs, le_src, le_dst) -> object:
    """``pairs`` maps a finite set into another; return a witness if it is not an order-reversing bijection."""
    keys = list(pairs)
    vals = [pairs[k] for k in keys]
    if len(set(vals)) != len(vals):
        return "not injective"
    for a in keys:
        for b in keys:
            if le_src(a, b) != le_dst(pairs[b], pairs[a]):
                return (a, b)
    return None


def hm_space(x: FiniteSpace) -> RoundTrip:
    """For sober X: ``K -> {U | K <= U}`` is an antitone bijection KS(X) -> SFilt(Omega(X))."""
    s = separation_check(powerset_mt(x), "sober")
    if not s:
        return _vacuous("hm_space", s)
    omega = x.sorted_opens
    frame = Frame(lattice_of_sets(omega))
    sfilt = set(scott_open_filters(frame))
    ks = sorted(compact_saturated(x))
    pairs = {k: frozenset(i for i, u in enumerate(omega) if k & ~u == 0) for k in ks}
    missing = [k for k, f in pairs.items() if f not in sfilt]
    if missing:
        return _result("hm_space", False, x.label(missing[0]))
    if set(pairs.values()) != sfilt:
        return _result("hm_space", False, "not onto")
    w = _antitone_bijection(pairs, lambda a, b: a & ~b == 0, lambda f, g: f <= g)
    return _result("hm_space", w is None, w, count=len(ks))


def hm_frame(f: Frame | FiniteLattice) -> RoundTrip:
    """SFilt(L) against KS(pt(L)), through ``K -> {a | K <= zeta(a)}``; also checks
    that ``H -> zeta^-1[H]`` is an order isomorphism SFilt(Omega(pt L)) -> SFilt(L)."""
    frame = _as_frame(f)
    pts = points(frame)
    x = pts.space
    sfilt = set(scott_open_filters(frame))
    omega = x.sorted_opens
    pos = {u: i for i, u in enumerate(omega)}
    sfilt_omega = scott_open_filters(Frame(lattice_of_sets(omega)))
    phi = {}
    for h in sfilt_omega:
        phi[h] = frozenset(a for a in range(frame.size) if pos[pts.zeta[a]] in h)
    if set(phi.values()) != sfilt or len(set(phi.values())) != len(phi):
        return _result("hm_frame", False, "phi is not a bijection")
    if _antitone_bijection(phi, lambda a, b: a <= b, lambda f, g: g <= f) is not None:
        return _result("hm_frame", False, "phi is not an order isomorphism")
    ks = sorted(compact_saturated(x))
    pairs = {k: frozenset(a for a in range(frame.size) if k & ~pts.zeta[a] == 0) for k in ks}
    if set(pairs.values()) != sfilt:
        return _result("hm_frame", False, "KS(pt L) does not map onto SFilt(L)")
    w = _antitone_bijection(pairs, lambda a, b: a & ~b == 0, lambda f, g: f <= g)
    return _result("hm_frame", w is None, w, count=len(ks))


def eta_proper(m: MTAlgebra) -> RoundTrip:
    s = separation_check(m, "sober")
    if not s:
        return _vacuous("eta_proper", s)
    target = powerset_mt(atoms_space(m))
    res = check_mt_morphism(eta_map(m).table, m, target)
    return _result("eta_proper", res.is_mt_morphism and res.is_proper, "eta not proper")


def eta_scott(m: MTAlgebra) -> RoundTrip:
    """For every Scott-open filter F of a sober M, ``up(eta[F])`` is Scott-open in ``P(at(M))``."""
    s = separation_check(m, "sober")
    if not s:
        return _vacuous("eta_scott", s)
    target = powerset_mt(atoms_space(m))
    eta = eta_map(m).table
    target_filters = {f.members for f in enumerate_filters(target, "scott_open")}
    for f in enumerate_filters(m, "scott_open"):
        img = frozenset(b for b in range(target.size) if any(eta[a] & ~b == 0 for a in f.members))
        if img not in target_filters:
            return _result("eta_scott", False, m.label(f.generator))
    return _result("eta_scott", True)


def eta_ks(m: MTAlgebra) -> RoundTrip:
    """For every compact saturated K of at(M), the meet of opens whose eta-image contains K is in KS(M)."""
    x = atoms_space(m)
    eta = eta_map(m).table
    ks_m = m.classes.compact_saturated
    for k in sorted(compact_saturated(x)):
        v = m.meet_all(u for u in m.opens if k & ~eta[u] == 0)
        if v not in ks_m:
            return _result("eta_ks", False, x.label(k))
    return _result("eta_ks", True)


def stone_path(b: FiniteBooleanAlgebra) -> RoundTrip:
    """B^sigma is Stone, CL(B^sigma) and CLP(at(B^sigma)) are isomorphic to B, and
    ``P(Uf(B))`` with the discrete structure is isomorphic to B^sigma."""
    ext = canonical_ext(b)
    sigma = ext.sigma
    st = compactness_check(sigma, "stone")
    if not st:
        return _result("stone_path", False, ("not stone", st.reason))
    if find_lattice_iso(clopen_algebra(sigma), b.lattice) is None:
        return _result("stone_path", False, "CL(B^sigma) not isomorphic to B")
    at = atoms_space(sigma)
    if find_lattice_iso(clopen_space_algebra(at), b.lattice) is None:
        return _result("stone_path", False, "CLP(at(B^sigma)) not isomorphic to B")
    k = len(ext.ultrafilters)
    if find_topology_iso(k, frozenset(range(1 << k)), sigma.n, sigma.opens) is None:
        return _result("stone_path", False, "P(Uf(B)) not isomorphic to B^sigma")
    return _result("stone_path", True, ultrafilters=k)


_ROUNDTRIP_INPUT = {
    "t_half_iso": "mt",
    "hl_unit": "mt",
    "hm_frame": "frame",
    "hm_space": "space",
    "eta_proper": "mt",
    "eta_scott": "mt",
    "eta_ks": "mt",
    "stone_path": "boolean",
}


def roundtrip_input_kind(target: str) -> str:
    return _ROUNDTRIP_INPUT[target]


def roundtrip_check(target: str, structure) -> RoundTrip:
    if target not in _ROUNDTRIP_INPUT:
        raise ValueError(f"unknown round-trip target {target!r}")
    fn = {
        "t_half_iso": t_half_iso,
        "hl_unit": hl_unit,
        "hm_frame": hm_frame,
        "hm_space": hm_space,
        "eta_proper": eta_proper,
        "eta_scott": eta_scott,
        "eta_ks": eta_ks,
        "stone_path": stone_path,
    }[target]
    return fn(structure)


def require(check: Check, what: str) -> None:
    if not check:
        raise HypothesisNotMet(f"{what}: {check.reason}", witness=check.witness)
