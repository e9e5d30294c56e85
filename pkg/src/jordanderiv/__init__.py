"""Exact classification of Jordan derivations on matrix algebras over Z and Z/m."""

from .algebra import (
    AlgebraSpec,
    MatElem,
    elem_mul,
    make_example1_algebra,
    make_full,
    make_pattern_algebra,
    make_upper_triangular,
    validate_closure,
)
from .classify import (
    ClassificationReport,
    IdentityReport,
    check_example1_counterexample,
    check_structure_identities,
    classify,
    is_antiderivation,
    is_derivation,
    is_jordan,
)
from .linmap import LinearMap, apply, coefficient_table, inner_map, make_map
from .ring import RingElem, RingSpec, is_two_torsion_free, ring_arith
from .solver import (
    MapSpace,
    build_constraints,
    compute_space,
    enumerate_space,
    inner_space,
    kernel_mod_p,
)
from .witness import (
    Witness,
    center_elements,
    synthesize_witness,
    synthesize_witness_full,
    synthesize_witness_triangular,
    verify_witness,
    witness_difference_central,
)

__version__ = "0.1.0"
