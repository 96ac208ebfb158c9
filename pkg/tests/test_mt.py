import random

import numpy as np
import pytest
from hypothesis import given

import naive
from conftest import as_sets, masks_to_labels, naive_space, spaces
from mtlab.errors import KuratowskiViolation, NotMTMorphism, NotSober, SizeGuardExceeded
from mtlab.mt import (
    SEPARATION_AXIOMS,
    check_mt_morphism,
    closure,
    compact_elements_cover,
    compact_elements_directed,
    compact_elements_fip,
    compactness_check,
    enumerate_filters,
    hofmann_mislove,
    keimel_paseka_check,
    mt_from_table,
    open_filters_bruteforce,
    separation_check,
    validate_mt,
    wedge_below,
)
from mtlab.spaces import discrete_space, indiscrete_space


def test_sierpinski_algebra(sier_mt):
    assert sier_mt.size == 4
    assert masks_to_labels(sier_mt, sier_mt.opens) == ["{0,1}", "{1}", "{}"]


def test_identity_box_is_discrete():
    m = mt_from_table(2, [0, 1, 2, 3])
    assert m.opens == frozenset(range(4))


def test_kuratowski_violation():
    # box {0} = {0} and box X = {0}: the top is not open
    with pytest.raises(KuratowskiViolation) as e:
        mt_from_table(2, [0, 0, 0, 1])
    assert e.value.witness == ("box(1)=1", "{0,1}")


def test_closure(sier_mt):
    ix = sier_mt.index
    assert sier_mt.label(closure(sier_mt, ix["{1}"])) == "{0,1}"
    assert closure(sier_mt, ix["{0}"]) == ix["{0}"]
    assert closure(sier_mt, 0) == 0


def test_sierpinski_classes(sier_mt):
    c = sier_mt.classes
    lab = lambda s: masks_to_labels(sier_mt, s)  # noqa: E731
    assert lab(c.closeds) == ["{0,1}", "{0}", "{}"]
    assert lab(c.saturated) == ["{0,1}", "{1}", "{}"]
    assert lab(c.clopen) == ["{0,1}", "{}"]
    assert lab(c.compact) == ["{0,1}", "{0}", "{1}", "{}"]
    assert lab(c.compact_saturated) == ["{0,1}", "{1}", "{}"]


def test_discrete_classes_are_everything():
    m = validate_mt(discrete_space(2))
    c = m.classes
    for name in ("opens", "closeds", "saturated", "locally_closed", "weakly_locally_closed", "regular_closed", "gc", "clopen", "compact"):
        assert getattr(c, name) == frozenset(range(4)), name


def test_indiscrete_classes():
    m = validate_mt(indiscrete_space(2))
    c = m.classes
    both = frozenset({0, 3})
    assert c.opens == c.closeds == c.locally_closed == c.weakly_locally_closed == both
    assert c.compact == frozenset(range(4))


@given(spaces(0, 4))
def test_classes_against_reference(x):
    m = validate_mt(x)
    pts, opens = naive_space(x)
    ref = naive.classes(pts, opens)
    for name, expected in ref.items():
        assert as_sets(getattr(m.classes, name)) == expected, name


@given(spaces(0, 4))
def test_compactness_oracles(x):
    m = validate_mt(x)
    every = frozenset(range(m.size))
    assert compact_elements_cover(m) == compact_elements_directed(m) == compact_elements_fip(m) == every


def test_compactness_oracle_guard():
    m = validate_mt(discrete_space(5))
    with pytest.raises(SizeGuardExceeded):
        compact_elements_cover(m, guard=20)


@given(spaces(0, 4))
def test_wedge_below_is_order_and_join_stable(x):
    m = validate_mt(x)
    wb = wedge_below(m)
    assert (wb == m.leq).all()
    assert wb[0].all()
    rng = random.Random(x.size)
    for _ in range(20):
        a, b, c, d = (rng.randrange(m.size) for _ in range(4))
        if wb[a, b] and wb[c, d]:
            assert wb[a | c, b | d]


def test_sierpinski_separation(sier_mt):
    expected = {"T0": True, "T_half": True, "T1": False, "sober": True, "hausdorff": False, "regular": False, "zero_dim": False}
    for ax, val in expected.items():
        assert separation_check(sier_mt, ax).holds == val, ax
    t1 = separation_check(sier_mt, "T1")
    assert t1.witness == "{1}"


def test_discrete_satisfies_all_axioms():
    m = validate_mt(discrete_space(3))
    assert all(separation_check(m, ax).holds for ax in SEPARATION_AXIOMS)


def test_indiscrete_not_t0():
    r = separation_check(validate_mt(indiscrete_space(2)), "T0")
    assert not r.holds and r.witness in ("{0}", "{1}")


@given(spaces(0, 4))
def test_separation_against_reference(x):
    m = validate_mt(x)
    pts, opens = naive_space(x)
    assert separation_check(m, "T0").holds == naive.is_t0(pts, opens)
    assert separation_check(m, "T_half").holds == naive.is_t_half(pts, opens)
    assert separation_check(m, "T1").holds == naive.is_t1(pts, opens)
    assert separation_check(m, "sober").holds == naive.is_sober(pts, opens)
    assert separation_check(m, "hausdorff").holds == naive.is_hausdorff(pts, opens)


@given(spaces(0, 5))
def test_finite_algebras_compact_and_locally_compact(x):
    m = validate_mt(x)
    assert compactness_check(m, "compact").holds
    assert compactness_check(m, "locally_compact").holds


def test_compactness_examples(sier_mt):
    assert compactness_check(sier_mt, "stably_locally_compact").holds
    assert not compactness_check(sier_mt, "locally_stone").holds
    assert compactness_check(validate_mt(discrete_space(2)), "stone").holds


def test_sierpinski_filters(sier_mt):
    fs = enumerate_filters(sier_mt)
    assert len(fs) == 3 and all(f.is_scott_open for f in fs)
    gens = sorted(sier_mt.label(f.generator) for f in fs)
    assert gens == ["{0,1}", "{1}", "{}"]
    opens_parts = sorted(masks_to_labels(sier_mt, f.members & sier_mt.opens) for f in fs)
    assert opens_parts == [["{0,1}"], ["{0,1}", "{1}"], ["{0,1}", "{1}", "{}"]]


def test_filter_counts():
    assert len(enumerate_filters(validate_mt(discrete_space(0)))) == 1
    assert len(enumerate_filters(validate_mt(discrete_space(2)))) == 4


@given(spaces(0, 4))
def test_filters_against_bruteforce(x):
    m = validate_mt(x)
    assert {f.members for f in enumerate_filters(m)} == set(open_filters_bruteforce(m))


def test_keimel_paseka(sier_mt):
    assert keimel_paseka_check(sier_mt).holds
    assert keimel_paseka_check(validate_mt(discrete_space(3))).holds
    with pytest.raises(NotSober):
        keimel_paseka_check(validate_mt(indiscrete_space(2)))


def test_hofmann_mislove_sierpinski(sier_mt):
    t = hofmann_mislove(sier_mt)
    ix = sier_mt.index
    assert t.alpha[ix["{0,1}"]].members == frozenset({ix["{0,1}"]})
    assert t.alpha[ix["{1}"]].members == frozenset({ix["{1}"], ix["{0,1}"]})
    assert t.alpha[0].members == frozenset(range(4))


@pytest.mark.parametrize("n,expected", [(1, 2), (3, 8)])
def test_hofmann_mislove_discrete(n, expected):
    t = hofmann_mislove(validate_mt(discrete_space(n)))
    assert len(t.alpha) == expected


def test_mt_morphisms(sier_mt):
    r = check_mt_morphism(tuple(range(4)), sier_mt, sier_mt)
    assert r.is_mt_morphism and r.is_proper
    point = validate_mt(discrete_space(1))
    # preimage along the constant map from Sierpinski to a point
    pre = (0, 3)
    assert check_mt_morphism(pre, point, sier_mt).is_mt_morphism
    # identity from the discrete algebra into Sierpinski: box of {0} is {0} but box_S {0} is empty
    with pytest.raises(NotMTMorphism):
        check_mt_morphism(tuple(range(4)), validate_mt(discrete_space(2)), sier_mt)


@given(spaces(0, 3))
def test_left_adjoint_of_identity(x):
    m = validate_mt(x)
    r = check_mt_morphism(tuple(range(m.size)), m, m)
    assert r.left_adjoint == tuple(range(m.size))
    assert np.array_equal(m.box_array[m.box_array], m.box_array)
