"""Finite-model laboratory for MT-algebras, frames and finite topological spaces.

Everything is finite and decided by exhaustive or vectorized search: boolean
algebras are bitmasks over their atoms, spaces are families of open bitmasks,
lattices carry full meet and join tables.
"""

from .config import DEFAULT_SIZE_GUARD, ENV_SIZE_GUARD, Settings, size_guard
from .documents import Document, load, parse, serialize
from .errors import (
    BijectionFailure,
    HypothesisNotMet,
    KuratowskiViolation,
    MTLabError,
    NotSober,
    OracleDisagreement,
    ParseError,
    SizeGuardExceeded,
    ValidationError,
)
from .frames import Frame, frame_predicate, points, validate_frame, way_below
from .functors import (
    atoms_space,
    bool_ext_mt,
    canonical_ext,
    canonical_map,
    lift_hom,
    opens_frame,
    points_space,
    powerset_mt,
    roundtrip_check,
)
from .iso import find_lattice_iso, find_mt_iso
from .mt import (
    MTAlgebra,
    check_mt_morphism,
    check_predicate,
    compactness_check,
    element_classes,
    enumerate_filters,
    hofmann_mislove,
    keimel_paseka_check,
    separation_check,
    validate_mt,
)
from .order import (
    FiniteBooleanAlgebra,
    FiniteLattice,
    FinitePoset,
    birkhoff,
    lattice_structure,
    macneille_completion,
    validate_boolean,
    validate_poset,
)
from .spaces import FiniteSpace, check_map, sierpinski_space, validate_space
from .sweep import SweepReport, sweep

__version__ = "0.1.0"
