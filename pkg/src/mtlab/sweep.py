"""Corpus sweeps: evaluate registered properties over generated structures.

Each property returns a verdict ``pass``, ``fail`` or ``vacuous``; an
implication whose antecedent is false, or a theorem whose hypothesis fails,
is vacuous and never counted as a pass.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable

import numpy as np

from .checks import Check
from .config import size_guard
from .documents import dumps
from .errors import HypothesisNotMet, MTLabError, SizeGuardExceeded
from .frames import (
    Frame,
    check_frame_hom,
    frame_predicate,
    points,
    way_below_bruteforce,
)
from .functors import (
    atoms_map,
    atoms_space,
    bool_ext_mt,
    canonical_ext,
    clopen_algebra,
    clopen_space_algebra,
    delta_map,
    epsilon_map,
    eta_map,
    eta_naturality,
    lift_hom,
    opens_frame,
    opens_map,
    powerset_mt,
    powerset_mt_map,
    roundtrip_check,
    theta_map,
    theta_naturality,
    zeta_map,
)
from .generate import all_topologies, distributive_lattices_upto, random_poset, random_topology
from .iso import find_lattice_iso
from .mt import (
    MTAlgebra,
    check_mt_morphism,
    compact_elements_cover,
    compact_elements_directed,
    compact_elements_fip,
    compactness_check,
    enumerate_filters,
    hofmann_mislove,
    keimel_paseka_check,
    open_filters_bruteforce,
    separation_check,
    wedge_below,
    zdim_closed_form,
    zdim_condition,
)
from .order import boolean_powerset, complemented_elements, downset_lattice, lattice_filters_bruteforce
from .spaces import FiniteSpace, check_map, compose_maps, space_predicate_direct, space_predicates

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"
ESS_SURJ_EXHAUSTIVE_MAX = 8
ESS_SURJ_SAMPLES = 200
FRAME_ORACLE_MAX = 6


@dataclass(frozen=True)
class Verdict:
    status: str
    witness: str | None = None


def _verdict(r) -> Verdict:
    if isinstance(r, Verdict):
        return r
    if isinstance(r, Check):
        return Verdict(PASS) if r.holds else Verdict(FAIL, _fmt(r.witness, r.reason))
    return Verdict(PASS) if r else Verdict(FAIL)


def _fmt(witness, reason: str = "") -> str:
    w = "" if witness is None else str(witness)
    return f"{reason}: {w}" if reason and w else (reason or w)


def implies(antecedent: bool, consequent) -> Verdict:
    if not antecedent:
        return Verdict(VACUOUS)
    return _verdict(consequent)


def iff(left: bool, right: bool, witness: str = "") -> Verdict:
    if bool(left) == bool(right):
        return Verdict(PASS)
    return Verdict(FAIL, f"{witness} lhs={bool(left)} rhs={bool(right)}".strip())


def guarded(fn, subject) -> Verdict:
    try:
        return _verdict(fn(subject))
    except HypothesisNotMet as exc:
        return Verdict(VACUOUS, str(exc))
    except SizeGuardExceeded as exc:
        # brute-force oracles only speak about structures within the guard
        return Verdict(VACUOUS, str(exc))
    except MTLabError as exc:
        return Verdict(FAIL, _fmt(exc.witness, f"{type(exc).__name__}: {exc}"))


# subjects


@dataclass(eq=False)
class SpaceSubject:
    name: str
    space: FiniteSpace
    seed: int = 0

    @cached_property
    def m(self) -> MTAlgebra:
        return powerset_mt(self.space)

    @cached_property
    def frame(self) -> Frame:
        return opens_frame(self.m)

    @cached_property
    def _sep(self) -> dict:
        return {}

    def sep(self, axiom: str) -> bool:
        if axiom not in self._sep:
            self._sep[axiom] = bool(separation_check(self.m, axiom))
        return self._sep[axiom]

    def comp(self, kind: str) -> bool:
        key = "c:" + kind
        if key not in self._sep:
            self._sep[key] = bool(compactness_check(self.m, kind))
        return self._sep[key]

    def fpred(self, kind: str) -> bool:
        key = "f:" + kind
        if key not in self._sep:
            self._sep[key] = bool(frame_predicate(self.frame, kind))
        return self._sep[key]

    @cached_property
    def morphisms(self):
        """Deterministic continuous maps ``x -> y -> z`` for functoriality checks."""
        rng = random.Random(f"{self.seed}:{self.name}")
        y = random_topology(rng.randint(1, 3), rng)
        z = random_topology(rng.randint(1, 3), rng)
        f = _random_continuous(self.space, y, rng)
        g = _random_continuous(y, z, rng)
        return y, z, f, g


def _random_continuous(x: FiniteSpace, y: FiniteSpace, rng: random.Random) -> tuple[int, ...]:
    for _ in range(20):
        f = tuple(rng.randrange(y.size) for _ in range(x.size))
        if check_map(f, x, y).is_continuous:
            return f
    return (rng.randrange(y.size),) * x.size  # constant maps are continuous


@dataclass(eq=False)
class FrameSubject:
    name: str
    frame: Frame


@dataclass(eq=False)
class BooleanSubject:
    name: str
    atoms: int
    seed: int = 0

    @cached_property
    def b(self):
        return boolean_powerset(self.atoms, tuple(f"a{i}" for i in range(self.atoms)))

    @cached_property
    def ext(self):
        return canonical_ext(self.b)


# properties over spaces

SPACE_PROPS: dict[str, tuple[tuple[str, ...], Callable]] = {}


def prop(*suites: str):
    def deco(fn):
        SPACE_PROPS[fn.__name__] = (suites, fn)
        return fn

    return deco


@prop("hm")
def hm_bijection(s: SpaceSubject):
    """alpha is an antitone bijection KS(M) -> SFilt(M), checked on every member."""
    hofmann_mislove(s.m, require_sober_hypothesis=False)
    return True


@prop("hm")
def hm_sober(s: SpaceSubject):
    hofmann_mislove(s.m)
    return True


@prop("hm", "duality")
def hm_space(s: SpaceSubject):
    return _roundtrip("hm_space", s.space)


@prop("hm", "duality")
def hm_frame(s: SpaceSubject):
    return _roundtrip("hm_frame", s.frame)


@prop("kp")
def keimel_paseka(s: SpaceSubject):
    return keimel_paseka_check(s.m)


@prop("separation")
def regular_implies_hausdorff(s):
    return implies(s.sep("regular"), s.sep("hausdorff"))


@prop("separation")
def hausdorff_implies_sober_t1(s):
    return implies(s.sep("hausdorff"), s.sep("sober") and s.sep("T1"))


@prop("separation")
def t1_implies_t_half(s):
    return implies(s.sep("T1"), s.sep("T_half"))


@prop("separation")
def t_half_implies_t0(s):
    return implies(s.sep("T_half"), s.sep("T0"))


@prop("separation")
def sober_implies_t0(s):
    return implies(s.sep("sober"), s.sep("T0"))


@prop("separation")
def hausdorff_iff_discrete(s):
    return iff(s.sep("hausdorff"), len(s.space.opens) == 1 << s.space.size)


@prop("separation")
def space_mt_agreement(s):
    from .spaces import SPACE_PREDICATES

    for kind in SPACE_PREDICATES:
        space_predicates(s.space, kind)
    return True


@prop("compactness")
def hausdorff_k_in_c(s):
    cl = s.m.classes
    return implies(s.sep("hausdorff"), cl.compact <= cl.closeds)


@prop("compactness")
def compact_c_in_k(s):
    cl = s.m.classes
    return implies(s.comp("compact"), cl.closeds <= cl.compact)


@prop("compactness")
def compact_hausdorff_c_eq_k(s):
    cl = s.m.classes
    return implies(s.comp("compact") and s.sep("hausdorff"), cl.closeds == cl.compact)


@prop("compactness")
def compact_hausdorff_locally_compact(s):
    return implies(s.comp("compact") and s.sep("hausdorff"), s.comp("locally_compact"))


@prop("compactness")
def compact_iff_atoms_compact(s):
    if not s.sep("sober"):
        return Verdict(VACUOUS)
    return iff(s.comp("compact"), space_predicate_direct(atoms_space(s.m), "compact").holds)


@prop("compactness", "transfer")
def locally_compact_iff_continuous(s):
    if not s.sep("sober"):
        return Verdict(VACUOUS)
    return iff(s.comp("locally_compact"), s.fpred("continuous"))


@prop("compactness", "transfer")
def stably_lc_iff_stably_continuous(s):
    if not s.sep("sober"):
        return Verdict(VACUOUS)
    return iff(s.comp("stably_locally_compact"), s.fpred("stably_continuous"))


@prop("compactness", "transfer")
def lc_hausdorff_iff_continuous_regular(s):
    # both sides range over locally compact sober algebras
    if not s.sep("sober"):
        return Verdict(VACUOUS)
    return iff(
        s.comp("locally_compact") and s.sep("hausdorff"),
        s.fpred("continuous") and s.fpred("regular"),
    )


@prop("compactness", "transfer")
def compact_hausdorff_iff_atoms(s):
    if not (s.comp("locally_compact") and s.sep("hausdorff")):
        return Verdict(VACUOUS)
    at = atoms_space(s.m)
    return iff(
        s.comp("compact") and s.sep("hausdorff"),
        space_predicate_direct(at, "compact").holds and space_predicate_direct(at, "hausdorff").holds,
    )


@prop("compactness", "transfer")
def locally_stone_iff_atoms(s):
    return iff(s.comp("locally_stone"), space_predicate_direct(atoms_space(s.m), "locally_stone").holds)


@prop("compactness", "transfer")
def locally_stone_iff_frame(s):
    if not (s.comp("locally_compact") and s.sep("hausdorff")):
        return Verdict(VACUOUS)
    return iff(s.comp("locally_stone"), s.fpred("locally_stone"))


@prop("t_half")
def t_half_iso(s):
    return _roundtrip("t_half_iso", s.m)


@prop("t_half", "zero_dim")
def zero_dim_iff_t_half_zdim(s):
    return iff(s.sep("zero_dim"), s.sep("T_half") and bool(zdim_condition(s.m)))


@prop("t_half", "zero_dim")
def zero_dim_iff_t0_zdim(s):
    """Corpus evidence on weakening T_half to T0 in the previous property."""
    return iff(s.sep("zero_dim"), s.sep("T0") and bool(zdim_condition(s.m)))


@prop("zero_dim")
def clopen_eq_complemented(s):
    cmp = complemented_elements(s.frame.lattice)
    opens = s.m.sorted_opens
    return {opens[c] for c in cmp} == set(s.m.classes.clopen)


@prop("zero_dim", "transfer")
def zero_dim_algebra_iff_frame(s):
    if not s.sep("T1"):
        return Verdict(VACUOUS)
    return iff(s.sep("zero_dim"), s.fpred("zero_dim"))


@prop("zero_dim")
def zdim_open_iff_closed(s):
    return iff(bool(zdim_condition(s.m)), bool(zdim_closed_form(s.m)))


@prop("duality")
def epsilon_homeomorphism(s):
    return epsilon_map(s.space).is_iso


@prop("duality")
def eta_iso_iff_atomic(s):
    # every finite boolean algebra is atomic
    return eta_map(s.m).is_iso


@prop("duality")
def zeta_iso(s):
    return zeta_map(s.frame).is_iso


@prop("duality")
def delta_homeo_iff_sober(s):
    return iff(delta_map(s.space).is_iso, space_predicate_direct(s.space, "sober").holds)


@prop("duality")
def theta_homeomorphism(s):
    return theta_map(s.m).is_iso


@prop("duality")
def hl_unit(s):
    return _roundtrip("hl_unit", s.m)


@prop("duality")
def eta_proper(s):
    return _roundtrip("eta_proper", s.m)


@prop("duality")
def eta_scott(s):
    return _roundtrip("eta_scott", s.m)


@prop("duality")
def eta_ks(s):
    return _roundtrip("eta_ks", s.m)


@prop("duality")
def eta_injective_on_opens(s):
    if not (s.sep("sober") and s.fpred("spatial")):
        return Verdict(VACUOUS)
    eta = eta_map(s.m).table
    at = atoms_space(s.m)
    return sorted(eta[u] for u in s.m.opens) == sorted(at.opens)


@prop("duality")
def opens_of_powerset_is_omega(s):
    return s.m.opens == s.space.opens


@prop("duality")
def spatial_agreement(s):
    if not (s.sep("sober") and s.sep("T_half")):
        return Verdict(VACUOUS)
    # a finite MT-algebra is atomic, hence spatial
    return iff(eta_map(s.m).is_iso, s.fpred("spatial"))


@prop("degeneracy")
def compact_is_everything(s):
    return s.m.classes.compact == frozenset(range(s.m.size))


@prop("degeneracy")
def wedge_below_is_leq(s):
    return np.array_equal(wedge_below(s.m), s.m.leq)


@prop("degeneracy")
def way_below_is_leq(s):
    return np.array_equal(s.frame.way_below, s.frame.lattice.leq)


@prop("degeneracy")
def open_filters_scott_open(s):
    return all(f.is_scott_open for f in enumerate_filters(s.m))


@prop("degeneracy")
def compact_and_locally_compact(s):
    return s.comp("compact") and s.comp("locally_compact")


@prop("degeneracy")
def open_filter_correspondence(s):
    fs = enumerate_filters(s.m)
    members = {f.members for f in fs}
    if s.m.size <= size_guard():
        return members == set(open_filters_bruteforce(s.m))
    return len(members) == len(fs)


@prop("oracle")
def compact_cover_oracle(s):
    return compact_elements_cover(s.m) == s.m.classes.compact


@prop("oracle")
def compact_directed_oracle(s):
    return compact_elements_directed(s.m) == s.m.classes.compact


@prop("oracle")
def compact_fip_oracle(s):
    return compact_elements_fip(s.m) == s.m.classes.compact


@prop("oracle")
def way_below_oracle(s):
    if s.frame.size > size_guard():
        return Verdict(VACUOUS)
    return np.array_equal(way_below_bruteforce(s.frame), s.frame.lattice.leq)


@prop("oracle")
def prime_oracle(s):
    points(s.frame)  # raises on disagreement within the guard
    return True


@prop("oracle")
def filters_oracle(s):
    lat = s.frame.lattice
    if lat.size > 16:
        return Verdict(VACUOUS)
    from .order import lattice_filters

    return set(lattice_filters(lat)) == set(lattice_filters_bruteforce(lat))


@prop("transfer")
def functor_identity(s):
    ident = tuple(range(s.space.size))
    pid = powerset_mt_map(ident, s.space, s.space)
    if pid.table != tuple(range(s.m.size)):
        return Verdict(FAIL, "P(id) != id")
    if atoms_map(pid, s.m, s.m) != ident:
        return Verdict(FAIL, "at(id) != id")
    if opens_map(pid, s.m, s.m).table != tuple(range(len(s.m.opens))):
        return Verdict(FAIL, "O(id) != id")
    return True


@prop("transfer")
def functor_composition(s):
    y, z, f, g = s.morphisms
    x = s.space
    gf = compose_maps(g, f)
    pf = powerset_mt_map(f, x, y)
    pg = powerset_mt_map(g, y, z)
    pgf = powerset_mt_map(gf, x, z)
    # contravariant: P(g . f) = P(f) . P(g)
    if pgf.table != pg.then(pf).table:
        return Verdict(FAIL, "P(g.f) != P(f).P(g)")
    mx, my, mz = powerset_mt(x), powerset_mt(y), powerset_mt(z)
    at_pf = atoms_map(pf, my, mx)
    at_pg = atoms_map(pg, mz, my)
    if compose_maps(at_pg, at_pf) != atoms_map(pgf, mz, mx):
        return Verdict(FAIL, "at(P(f).P(g)) != at(P(g)).at(P(f))")
    opf, opg, opgf = opens_map(pf, my, mx), opens_map(pg, mz, my), opens_map(pgf, mz, mx)
    if opg.then(opf).table != opgf.table:
        return Verdict(FAIL, "O does not preserve composition")
    return True


@prop("transfer")
def eta_natural(s):
    y, _, f, _ = s.morphisms
    pf = powerset_mt_map(f, s.space, y)
    return eta_naturality(pf, powerset_mt(y), s.m)


@prop("transfer")
def theta_natural(s):
    y, _, f, _ = s.morphisms
    my = powerset_mt(y)
    if not (s.sep("sober") and separation_check(my, "sober")):
        return Verdict(VACUOUS)
    pf = powerset_mt_map(f, s.space, y)
    return theta_naturality(pf, my, s.m)


@prop("transfer")
def proper_restricts_to_proper(s):
    y, _, f, _ = s.morphisms
    my = powerset_mt(y)
    res = check_mt_morphism(powerset_mt_map(f, s.space, y), my, s.m)
    if not res.is_proper:
        return Verdict(VACUOUS)
    fh = check_frame_hom(opens_map(res.map, my, s.m), opens_frame(my), s.frame)
    return fh.is_frame_hom and fh.is_proper


@prop("transfer")
def powerset_of_proper_is_proper(s):
    y, _, f, _ = s.morphisms
    cm = check_map(f, s.space, y)
    if not cm.is_proper:
        return Verdict(VACUOUS)
    return bool(powerset_mt_map(f, s.space, y).proper)


def _roundtrip(target: str, structure) -> Verdict:
    r = roundtrip_check(target, structure)
    return Verdict(r.verdict, None if r.verdict == PASS else _fmt(r.witness, str(r.detail) if r.detail else ""))


# properties over frames


FRAME_PROPS: dict[str, Callable] = {}


def fprop(fn):
    FRAME_PROPS[fn.__name__] = fn
    return fn


@fprop
def essentially_surjective(s: FrameSubject):
    m = bool_ext_mt(s.frame)
    return find_lattice_iso(m.opens_lattice, s.frame.lattice) is not None


@fprop
def boolean_extension_t_half(s: FrameSubject):
    return separation_check(bool_ext_mt(s.frame), "T_half")


@fprop
def frame_zeta_iso(s: FrameSubject):
    return zeta_map(s.frame).is_iso


@fprop
def frame_hm(s: FrameSubject):
    return _roundtrip("hm_frame", s.frame)


@fprop
def frame_way_below_oracle(s: FrameSubject):
    if s.frame.size > FRAME_ORACLE_MAX:
        return Verdict(VACUOUS)
    return np.array_equal(way_below_bruteforce(s.frame), s.frame.lattice.leq)


@fprop
def frame_identity_proper(s: FrameSubject):
    r = check_frame_hom(tuple(range(s.frame.size)), s.frame, s.frame)
    return r.is_frame_hom and r.is_proper


@fprop
def frame_continuous_spatial(s: FrameSubject):
    return frame_predicate(s.frame, "continuous").holds and frame_predicate(s.frame, "spatial").holds


# properties over boolean algebras


BOOL_PROPS: dict[str, Callable] = {}


def bprop(fn):
    BOOL_PROPS[fn.__name__] = fn
    return fn


@bprop
def stone_path(s: BooleanSubject):
    return _roundtrip("stone_path", s.b)


@bprop
def sigma_is_stone(s: BooleanSubject):
    m = s.ext.sigma
    return all(compactness_check(m, k) for k in ("compact", "stone")) and separation_check(m, "hausdorff").holds and separation_check(m, "zero_dim").holds


@bprop
def clopens_iso_base(s: BooleanSubject):
    return find_lattice_iso(clopen_algebra(s.ext.sigma), s.b.lattice) is not None


@bprop
def atoms_discrete(s: BooleanSubject):
    at = atoms_space(s.ext.sigma)
    return at.size == s.atoms and len(at.opens) == 1 << at.size and find_lattice_iso(clopen_space_algebra(at), s.b.lattice) is not None


@bprop
def lifted_homs_restrict(s: BooleanSubject):
    """Random homs out of this algebra; ``lift_hom`` raises unless ``h^sigma . e = e . h``."""
    rng = random.Random(f"{s.seed}:{s.name}")
    for _ in range(HOMS_PER_ALGEBRA):
        b2_atoms = rng.randint(0, 4) if s.atoms else 0
        h, b2 = random_boolean_hom(s.b, b2_atoms, rng)
        lift_hom(h, s.ext, canonical_ext(b2))
    return True


HOMS_PER_ALGEBRA = 20


def random_boolean_hom(b1, b2_atoms: int, rng: random.Random):
    """A boolean hom ``P(n) -> P(k)`` from a random map of atoms ``k -> n``: ``A -> phi^-1(A)``."""
    n = len(b1.atom_list)
    b2 = boolean_powerset(b2_atoms, tuple(f"a{i}" for i in range(b2_atoms)))
    phi = [rng.randrange(n) for _ in range(b2_atoms)]
    h = tuple(sum(1 << y for y in range(b2_atoms) if a >> phi[y] & 1) for a in range(b1.size))
    return h, b2


# suites and reports

SPACE_SUITES = ("hm", "kp", "separation", "compactness", "t_half", "duality", "zero_dim", "degeneracy", "oracle", "transfer")
SUITES = SPACE_SUITES + ("full", "ess_surj", "stone")


def suite_properties(suite: str) -> list[str]:
    if suite == "ess_surj":
        return sorted(FRAME_PROPS)
    if suite == "stone":
        return sorted(BOOL_PROPS)
    if suite == "full":
        return sorted(SPACE_PROPS)
    if suite not in SPACE_SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return sorted(name for name, (suites, _) in SPACE_PROPS.items() if suite in suites)


@lru_cache(maxsize=8)
def corpus(suite: str, size: int, seed: int, count: int) -> tuple:
    """Subjects for a sweep; deterministic in its arguments."""
    rng = random.Random(seed)
    if suite == "ess_surj":
        if size <= ESS_SURJ_EXHAUSTIVE_MAX:
            lats = distributive_lattices_upto(size)
            return tuple(FrameSubject(f"dlat-{i}", Frame(l)) for i, l in enumerate(lats))
        out = []
        for i in range(count or ESS_SURJ_SAMPLES):
            out.append(FrameSubject(f"dlat-s{seed}-{i}", Frame(downset_lattice(random_poset(rng.randint(0, size), rng)))))
        return tuple(out)
    if suite == "stone":
        return tuple(BooleanSubject(f"boolean-{k}", k, seed) for k in range(size + 1))
    if size <= 4:
        return tuple(SpaceSubject(f"topology-{size}-{i}", x, seed) for i, x in enumerate(all_topologies(size)))
    return tuple(SpaceSubject(f"topology-{size}-s{seed}-{i}", random_topology(size, rng), seed) for i in range(count))


def _props_for(suite: str) -> list[tuple[str, Callable]]:
    names = suite_properties(suite)
    table = FRAME_PROPS if suite == "ess_surj" else BOOL_PROPS if suite == "stone" else {k: v[1] for k, v in SPACE_PROPS.items()}
    return [(n, table[n]) for n in names]


def evaluate_item(args: tuple) -> list[tuple[str, str, str | None]]:
    suite, size, seed, count, index = args
    subject = corpus(suite, size, seed, count)[index]
    return [(name, *_unpack(guarded(fn, subject))) for name, fn in _props_for(suite)]


def _unpack(v: Verdict) -> tuple[str, str | None]:
    return v.status, v.witness


@dataclass
class SweepReport:
    suite: str
    generator: str
    size: int
    seed: int
    count: int
    rows: dict[str, dict[str, int]]
    failures: list[dict] = field(default_factory=list)

    def to_object(self) -> dict:
        return {
            "corpus": {
                "generator": self.generator,
                "size": self.size,
                "seed": self.seed,
                "count": self.count,
            },
            "suite": self.suite,
            "rows": self.rows,
            "failures": self.failures,
        }

    def to_json(self) -> str:
        return dumps(self.to_object())

    @property
    def total_failures(self) -> int:
        return sum(r[FAIL] for r in self.rows.values())

    def accounting_holds(self) -> bool:
        return all(sum(r.values()) == self.count for r in self.rows.values())

    def text(self) -> str:
        lines = [f"suite {self.suite}: {self.generator} size={self.size} seed={self.seed} items={self.count}"]
        width = max((len(n) for n in self.rows), default=0)
        for name, r in self.rows.items():
            lines.append(f"  {name:<{width}}  pass={r[PASS]} fail={r[FAIL]} vacuous={r[VACUOUS]}")
        for f in self.failures:
            lines.append(f"  FAIL {f['property']} on {f['item']}: {f['witness']}")
        return "\n".join(lines) + "\n"


def sweep(suite: str, size: int, seed: int = 0, count: int = 0, jobs: int = 1) -> SweepReport:
    items = corpus(suite, size, seed, count)
    args = [(suite, size, seed, count, i) for i in range(len(items))]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(evaluate_item, args, chunksize=max(1, len(args) // (4 * jobs))))
    else:
        results = [evaluate_item(a) for a in args]
    names = suite_properties(suite)
    rows = {n: {PASS: 0, FAIL: 0, VACUOUS: 0} for n in names}
    failures = []
    for subject, res in zip(items, results):
        for name, status, witness in res:
            rows[name][status] += 1
            if status == FAIL:
                failures.append({"item": subject.name, "property": name, "witness": witness})
    generator = {"ess_surj": "dlat", "stone": "boolean"}.get(suite, "topology")
    return SweepReport(suite, generator, size, seed, len(items), rows, failures)
