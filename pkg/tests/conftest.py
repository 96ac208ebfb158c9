import random
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from mtlab.documents import load  # noqa: E402
from mtlab.generate import random_poset, random_topology  # noqa: E402
from mtlab.order import downset_lattice  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=400, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def naive_space(x):
    """``(points, opens)`` in the reference representation, points as indices."""
    pts = frozenset(range(x.size))
    return pts, {frozenset(i for i in range(x.size) if u >> i & 1) for u in x.opens}


def as_sets(masks):
    return {frozenset(i for i in range(64) if m >> i & 1) for m in masks}


@st.composite
def spaces(draw, lo=0, hi=5):
    n = draw(st.integers(lo, hi))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_topology(n, random.Random(seed))


@st.composite
def dlattices(draw, lo=0, hi=5):
    n = draw(st.integers(lo, hi))
    seed = draw(st.integers(0, 2**32 - 1))
    return downset_lattice(random_poset(n, random.Random(seed)))


@pytest.fixture
def sier():
    return load("sierpinski").structure


@pytest.fixture
def sier_mt():
    return load("sierpinski_mt").structure


@pytest.fixture
def chain3():
    return load("chain3").structure


def masks_to_labels(m, masks):
    return sorted(m.label(a) for a in masks)


def bool_table(rows):
    return np.array(rows, dtype=bool)
