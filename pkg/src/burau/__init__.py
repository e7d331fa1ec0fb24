"""Exact Burau representations of Artin-Tits groups, their categorical
counterparts, and kernel-element search."""

from .complexes import (
    ProjComplex,
    act_complex,
    apply_twist,
    euler_pairing,
    hom_table,
    is_spherical,
    k0_class,
    minimize,
    projective,
    render_hom_table,
    total_hom_dim,
)
from .criteria import (
    KernelCertificate,
    Rejection,
    criterion1,
    criterion2,
    verify_kernel_word,
)
from .fixtures import affine_fixture, all_fixtures, d4_fixture
from .garside import (
    CoxeterElt,
    DualGarside,
    DualSimple,
    GarsideNF,
    NotFiniteType,
    coxeter_element,
    divides,
    garside_context,
    interval,
    is_trivial_braid,
    reflections,
    samecurve_check,
    word_to_nf,
)
from .graphs import (
    INF,
    CoxeterGraph,
    commutator_word,
    conjugated_generator,
    full_subgraph_obstruction,
    inverse_word,
    load_graph,
    parse_graph,
    preset,
    preset_names,
    validate_word,
    word_from_string,
)
from .laurent import QQ, ZZ, CoefficientRing, IntegersMod, LaurentPoly
from .matrices import (
    DUAL,
    STANDARD,
    BurauMatrix,
    BurauVector,
    PairingForm,
    act,
    basis_vector,
    generator_matrix,
    identity_matrix,
    is_identity,
    pairing,
    spread,
    word_matrix,
)
from .search import (
    BucketKey,
    CurveRecord,
    CurveStore,
    bucket_search,
    confirm_pair,
    curve_record,
    enumerate_curves,
    find_pairs,
    verify_bigelow3,
)
from .zigzag import Elt, ZigzagAlgebra, zigzag

__version__ = "0.1.0"

__all__ = [
    "BucketKey",
    "BurauMatrix",
    "BurauVector",
    "CoefficientRing",
    "CoxeterElt",
    "CoxeterGraph",
    "CurveRecord",
    "CurveStore",
    "DUAL",
    "DualGarside",
    "DualSimple",
    "Elt",
    "GarsideNF",
    "INF",
    "IntegersMod",
    "KernelCertificate",
    "LaurentPoly",
    "NotFiniteType",
    "PairingForm",
    "ProjComplex",
    "QQ",
    "Rejection",
    "STANDARD",
    "ZZ",
    "ZigzagAlgebra",
    "act",
    "act_complex",
    "affine_fixture",
    "all_fixtures",
    "apply_twist",
    "basis_vector",
    "bucket_search",
    "commutator_word",
    "confirm_pair",
    "conjugated_generator",
    "coxeter_element",
    "criterion1",
    "criterion2",
    "curve_record",
    "d4_fixture",
    "divides",
    "enumerate_curves",
    "euler_pairing",
    "find_pairs",
    "full_subgraph_obstruction",
    "garside_context",
    "generator_matrix",
    "hom_table",
    "identity_matrix",
    "interval",
    "inverse_word",
    "is_identity",
    "is_spherical",
    "is_trivial_braid",
    "k0_class",
    "load_graph",
    "minimize",
    "pairing",
    "parse_graph",
    "preset",
    "preset_names",
    "projective",
    "reflections",
    "render_hom_table",
    "samecurve_check",
    "spread",
    "total_hom_dim",
    "validate_word",
    "verify_bigelow3",
    "verify_kernel_word",
    "word_from_string",
    "word_matrix",
    "word_to_nf",
    "zigzag",
]
