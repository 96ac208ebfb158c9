"""Invariants checked on randomly drawn finite spaces, lattices and tables."""

import random

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from conftest import dlattices, spaces
from mtlab.documents import Document, parse, serialize
from mtlab.frames import Frame, frame_predicate
from mtlab.functors import bool_ext_mt, opens_frame, powerset_mt, t_half_iso
from mtlab.iso import find_mt_iso, lattices_isomorphic
from mtlab.mt import (
    check_kuratowski,
    closure,
    enumerate_filters,
    hofmann_mislove,
    keimel_paseka_check,
    mt_from_table,
    separation_check,
    zdim_closed_form,
    zdim_condition,
)
from mtlab.order import complemented_elements


@given(spaces(0, 5))
def test_box_is_kuratowski(x):
    m = powerset_mt(x)
    check_kuratowski(list(m.box), m.n)
    box = m.box_array
    assert (box[box] == box).all()
    idx = np.arange(m.size)
    assert (box[idx[:, None] & idx[None, :]] == (box[:, None] & box[None, :])).all()


@given(spaces(0, 5))
def test_closure_is_dual_of_interior(x):
    m = powerset_mt(x)
    for a in range(m.size):
        assert closure(m, a) == m.neg(m.box[m.neg(a)])
        assert a & ~closure(m, a) == 0


@given(spaces(0, 5))
def test_separation_chain(x):
    m = powerset_mt(x)
    s = {ax: separation_check(m, ax).holds for ax in ("T0", "T_half", "T1", "sober", "hausdorff", "regular")}
    assert not s["regular"] or s["hausdorff"]
    assert not s["hausdorff"] or (s["sober"] and s["T1"])
    assert not (s["sober"] and s["T1"]) or s["T_half"]
    assert not s["T_half"] or s["T0"]


@given(spaces(0, 4))
def test_compactness_lemmas(x):
    m = powerset_mt(x)
    c = m.classes
    if separation_check(m, "hausdorff").holds:
        assert c.compact <= c.closeds
    assert c.closeds <= c.compact


@given(spaces(0, 4))
def test_hofmann_mislove_is_antitone_bijection(x):
    m = powerset_mt(x)
    t = hofmann_mislove(m, require_sober_hypothesis=False)
    ks = sorted(t.alpha)
    assert len(ks) == len(enumerate_filters(m, "scott_open"))
    for s in ks:
        for u in ks:
            assert (u & ~s == 0) == (t.alpha[s].members <= t.alpha[u].members)


@given(spaces(0, 4))
def test_keimel_paseka_on_sober(x):
    m = powerset_mt(x)
    if separation_check(m, "sober").holds:
        assert keimel_paseka_check(m).holds


@given(spaces(0, 4))
def test_t_half_iff_boolean_extension_iso(x):
    m = powerset_mt(x)
    th = separation_check(m, "T_half").holds
    assert th == (find_mt_iso(m, bool_ext_mt(opens_frame(m))) is not None)
    assert t_half_iso(m).verdict in ("pass", "vacuous")


@given(spaces(0, 4))
def test_clopens_are_complemented_opens(x):
    m = powerset_mt(x)
    f = opens_frame(m)
    cmp = {m.sorted_opens[i] for i in complemented_elements(f.lattice)}
    assert cmp == set(m.classes.clopen)
    assert zdim_condition(m).holds == zdim_closed_form(m).holds
    if separation_check(m, "T1").holds:
        assert separation_check(m, "zero_dim").holds == frame_predicate(f, "zero_dim").holds


@given(dlattices(0, 5))
def test_essential_surjectivity(l):
    assert lattices_isomorphic(opens_frame(bool_ext_mt(Frame(l))).lattice, l)


@given(spaces(0, 5), st.integers(0, 2**32 - 1))
def test_isomorphism_invariant_under_relabelling(x, seed):
    perm = list(range(x.size))
    random.Random(seed).shuffle(perm)
    opens = [sum(1 << perm[p] for p in range(x.size) if u >> p & 1) for u in x.opens]
    m1 = powerset_mt(x)
    m2 = mt_from_table(x.size, [_interior(opens, a) for a in range(1 << x.size)])
    assert find_mt_iso(m1, m2) is not None


def _interior(opens, a):
    out = 0
    for u in opens:
        if u & ~a == 0:
            out |= u
    return out


@given(spaces(0, 4))
def test_document_round_trip_preserves_algebra(x):
    m = powerset_mt(x)
    doc = parse(serialize(Document("mt", m)))
    assert doc.structure.box == m.box
