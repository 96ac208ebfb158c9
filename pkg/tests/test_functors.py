import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import dlattices, spaces
from mtlab.errors import NotSober
from mtlab.frames import Frame, check_frame_hom
from mtlab.functors import (
    atoms_space,
    bool_ext_mt,
    canonical_ext,
    canonical_map,
    clopen_algebra,
    eta_naturality,
    hl_unit,
    lift_hom,
    opens_frame,
    opens_map,
    points_space,
    powerset_mt,
    powerset_mt_map,
    roundtrip_check,
    stone_path,
    t_half_iso,
)
from mtlab.iso import find_homeomorphism, find_mt_iso, lattices_isomorphic
from mtlab.mt import check_mt_morphism, compactness_check, separation_check, validate_mt
from mtlab.order import boolean_powerset, lattice_structure, powerset_lattice, validate_poset
from mtlab.spaces import check_map, discrete_space, indiscrete_space, sierpinski_space


def chain3():
    return lattice_structure(validate_poset(["0", "m", "1"], [("0", "m"), ("m", "1")]))


def test_powerset_examples(sier_mt):
    m = powerset_mt(sierpinski_space())
    assert m.box == sier_mt.box
    assert powerset_mt(discrete_space(1)).size == 2


def test_proper_map_gives_proper_morphism(sier):
    point = discrete_space(1)
    f = powerset_mt_map((0, 0), sier, point)
    assert f.proper
    r = check_mt_morphism(f.table, powerset_mt(point), powerset_mt(sier))
    assert r.is_proper


def test_atoms(sier_mt):
    at = atoms_space(sier_mt)
    assert find_homeomorphism(at, sierpinski_space()) is not None
    assert atoms_space(validate_mt(discrete_space(1))).size == 1


@given(spaces(0, 4))
def test_epsilon_is_homeomorphism(x):
    assert canonical_map("epsilon", x).is_iso
    assert find_homeomorphism(atoms_space(powerset_mt(x)), x) is not None


def test_opens_examples(sier_mt):
    assert lattices_isomorphic(opens_frame(sier_mt).lattice, chain3())
    assert lattices_isomorphic(opens_frame(validate_mt(discrete_space(2))).lattice, powerset_lattice(2))


@given(spaces(0, 3))
def test_restriction_of_proper_morphism_is_proper_frame_hom(x):
    m = powerset_mt(x)
    ident = tuple(range(m.size))
    r = check_mt_morphism(ident, m, m)
    assert r.is_proper
    f = opens_frame(m)
    assert check_frame_hom(opens_map(ident, m, m).table, f, f).is_proper


def test_points_examples():
    assert find_homeomorphism(points_space(chain3()), sierpinski_space()) is not None
    for n in range(4):
        assert find_homeomorphism(points_space(powerset_lattice(n)), discrete_space(n)) is not None
    assert points_space(lattice_structure(validate_poset(["*"], []))).size == 0


def test_boolean_extension_examples(sier_mt):
    assert find_mt_iso(bool_ext_mt(chain3()), sier_mt) is not None
    d = bool_ext_mt(powerset_lattice(2))
    assert d.box == tuple(range(4))


@given(dlattices(0, 4))
def test_opens_of_boolean_extension(l):
    assert lattices_isomorphic(opens_frame(bool_ext_mt(l)).lattice, l)


def test_canonical_extension_examples():
    e = canonical_ext(boolean_powerset(2))
    assert e.sigma.size == 4 and e.sigma.box == tuple(range(4))
    assert lattices_isomorphic(clopen_algebra(e.sigma), boolean_powerset(2).lattice)
    one = canonical_ext(boolean_powerset(0))
    assert one.sigma.size == 1
    two = canonical_ext(boolean_powerset(1))
    assert two.sigma.size == 2 and compactness_check(two.sigma, "stone").holds


@pytest.mark.parametrize("n", range(5))
def test_canonical_extension_is_stone(n):
    s = canonical_ext(boolean_powerset(n)).sigma
    assert compactness_check(s, "compact").holds
    assert separation_check(s, "hausdorff").holds
    assert separation_check(s, "zero_dim").holds


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 10**6))
def test_lifted_hom_restricts(n, k, seed):
    if n == 0 and k > 0:
        return
    rng = random.Random(seed)
    b1, b2 = boolean_powerset(n), boolean_powerset(k)
    phi = [rng.randrange(n) for _ in range(k)]
    h = tuple(sum(1 << y for y in range(k) if a >> phi[y] & 1) for a in range(1 << n))
    e1, e2 = canonical_ext(b1), canonical_ext(b2)
    lifted = lift_hom(h, e1, e2)
    assert all(lifted.table[e1.embed[a]] == e2.embed[h[a]] for a in range(b1.size))


@given(spaces(0, 4))
def test_eta_iso_on_finite_algebras(x):
    assert canonical_map("eta", powerset_mt(x)).is_iso


@given(dlattices(0, 4))
def test_zeta_iso_on_finite_frames(l):
    assert canonical_map("zeta", Frame(l)).is_iso


def test_delta_and_theta(sier):
    assert canonical_map("delta", sier).is_iso
    assert canonical_map("theta", powerset_mt(sier)).is_iso
    with pytest.raises(NotSober):
        canonical_map("theta", powerset_mt(indiscrete_space(2)))
    assert not canonical_map("delta", indiscrete_space(2)).is_iso


@given(spaces(0, 4))
def test_delta_iso_iff_sober(x):
    sober = separation_check(powerset_mt(x), "sober").holds
    assert canonical_map("delta", x).is_iso == sober


def test_t_half_iso_examples(sier_mt):
    assert t_half_iso(sier_mt).verdict == "pass"
    r = t_half_iso(validate_mt(indiscrete_space(2)))
    assert r.verdict == "vacuous" and r.detail["hypothesis"]


def test_stone_path_small():
    for n in range(4):
        assert stone_path(boolean_powerset(n)).verdict == "pass"


def test_hl_unit_sierpinski(sier_mt):
    assert hl_unit(sier_mt).holds
    assert hl_unit(validate_mt(indiscrete_space(2))).verdict == "vacuous"


def test_roundtrip_dispatch(sier_mt):
    assert roundtrip_check("eta_ks", sier_mt).holds
    with pytest.raises(ValueError):
        roundtrip_check("nope", sier_mt)


@given(spaces(0, 3), spaces(0, 3))
def test_eta_natural_for_continuous_maps(x, y):
    if y.size == 0 and x.size > 0:
        return
    rng = random.Random(x.size * 10 + y.size)
    for _ in range(5):
        f = tuple(rng.randrange(y.size) for _ in range(x.size))
        if check_map(f, x, y).is_continuous:
            pf = powerset_mt_map(f, x, y)
            assert eta_naturality(pf.table, powerset_mt(y), powerset_mt(x)).holds
