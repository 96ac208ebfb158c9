import pytest
from hypothesis import given
from hypothesis import strategies as st

import naive
from mtlab.documents import serialize
from mtlab.errors import SizeGuardExceeded
from mtlab.generate import (
    all_topologies,
    distributive_lattices_upto,
    generate,
    topologies_bruteforce,
)
from mtlab.iso import lattices_isomorphic
from mtlab.order import is_distributive


def test_topology_counts():
    # labelled topologies on 0..4 points
    assert [len(all_topologies(n)) for n in range(5)] == [1, 1, 4, 29, 355]


@pytest.mark.parametrize("n", range(4))
def test_topologies_against_reference(n):
    ref = {frozenset(sum(1 << p for p in u) for u in t) for t in naive.all_topologies(n)}
    assert {x.opens for x in all_topologies(n)} == ref == set(topologies_bruteforce(n))


def test_generate_exhaustive_and_single():
    assert len(generate("topology", 4)) == 355
    assert len(generate("topology", 1, seed=99)) == 1


@given(st.sampled_from(["topology", "preorder", "dlat", "boolean", "mt_table"]), st.integers(0, 6), st.integers(0, 2**64 - 1))
def test_determinism(kind, size, seed):
    a = [serialize(d) for d in generate(kind, size, seed, count=2)]
    b = [serialize(d) for d in generate(kind, size, seed, count=2)]
    assert a == b


def test_size_guard():
    with pytest.raises(SizeGuardExceeded):
        generate("topology", 25, guard=20)


def test_distributive_lattice_counts():
    lats = distributive_lattices_upto(8)
    counts = [sum(1 for l in lats if l.size == k) for k in range(1, 9)]
    # distributive lattices up to isomorphism with 1..8 elements
    assert counts == [1, 1, 1, 2, 3, 5, 8, 15]
    assert all(is_distributive(l).holds for l in lats)
    for i, a in enumerate(lats):
        for b in lats[i + 1 :]:
            assert a.size != b.size or not lattices_isomorphic(a, b)
