"""Exact l2-homological invariants of Coxeter systems.

A Coxeter system is given by a finite vertex set and a symmetric integer
labelling m(u, v) >= 2 (infinity for absent pairs).  From that data the
library builds the nerve -- the simplicial complex whose simplices are the
subsets generating finite subgroups -- and computes, in exact rational
arithmetic, the orbihedral Euler characteristic and those l2-Betti numbers
that the implemented vanishing rules determine.  On top of the rule engine
it produces machine-checkable non-planarity certificates: a labelled
complex whose second l2-Betti number is provably positive cannot embed in
the 2-sphere, which reproduces the classical non-planarity of K5 (all
edges labelled 3) and K3,3 (right-angled).
"""

from coxeter_l2.model import (
    INFINITY,
    CoxeterSpec,
    SpecError,
    MalformedDocument,
    DuplicateVertex,
    ConflictingLabel,
    LabelOutOfRange,
    UnknownVertex,
    parse_spec,
    induced_subspec,
)
from coxeter_l2.spherical import (
    FiniteTypeComponent,
    SphericalVerdict,
    IndeterminateNumeric,
    diagram_components,
    classify,
    cosine_matrix_test,
    spherical_by_cosine,
)
from coxeter_l2.nerve import (
    CapExceeded,
    SimplicialComplex,
    Nerve,
    SubcomplexWitness,
    SphereKind,
    build_nerve,
    full_subcomplex,
    has_right_angled_complement,
    link,
    is_full_subcomplex,
    join2,
    cone2,
    recognize_sphere,
    detect_join2,
)
from coxeter_l2.invariants import (
    UNKNOWN,
    BettiVector,
    RuleContext,
    InvalidWitness,
    ContradictoryRules,
    UnknownEntries,
    FiniteGroup,
    DimensionTooHigh,
    Beta2Bound,
    chi_orb,
    chi_orb_chain_sum,
    betti,
    atiyah_check,
    betti_lower_bound_dim2,
)
from coxeter_l2.planarity import (
    RotationSystem,
    FaceSet,
    Certificate,
    ProofTrace,
    TraceStep,
    NotSpherical,
    NonSimpleFaceBoundary,
    HypothesisViolated,
    TooLarge,
    faces_from_rotation,
    cone_construction,
    certify_nonplanar,
    trace_vanishing,
    brute_force_planar,
)
from coxeter_l2.enumeration import (
    NumericCollision,
    reflection_generators,
    enumerate_order,
    verify_classification,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "CoxeterSpec",
    "SpecError",
    "MalformedDocument",
    "DuplicateVertex",
    "ConflictingLabel",
    "LabelOutOfRange",
    "UnknownVertex",
    "parse_spec",
    "induced_subspec",
    "FiniteTypeComponent",
    "SphericalVerdict",
    "IndeterminateNumeric",
    "diagram_components",
    "classify",
    "cosine_matrix_test",
    "spherical_by_cosine",
    "CapExceeded",
    "SimplicialComplex",
    "Nerve",
    "SubcomplexWitness",
    "SphereKind",
    "build_nerve",
    "full_subcomplex",
    "has_right_angled_complement",
    "link",
    "is_full_subcomplex",
    "join2",
    "cone2",
    "recognize_sphere",
    "detect_join2",
    "UNKNOWN",
    "BettiVector",
    "RuleContext",
    "InvalidWitness",
    "ContradictoryRules",
    "UnknownEntries",
    "FiniteGroup",
    "DimensionTooHigh",
    "Beta2Bound",
    "chi_orb",
    "chi_orb_chain_sum",
    "betti",
    "atiyah_check",
    "betti_lower_bound_dim2",
    "RotationSystem",
    "FaceSet",
    "Certificate",
    "ProofTrace",
    "TraceStep",
    "NotSpherical",
    "NonSimpleFaceBoundary",
    "HypothesisViolated",
    "TooLarge",
    "faces_from_rotation",
    "cone_construction",
    "certify_nonplanar",
    "trace_vanishing",
    "brute_force_planar",
    "NumericCollision",
    "reflection_generators",
    "enumerate_order",
    "verify_classification",
]
