"""Exact-arithmetic toolkit for right Hom-alternative algebras.

A Hom-algebra is a vector space with a bilinear product and a linear
twisting map alpha; the classical case is alpha = Id.  This package
builds such algebras from structure constants over the rationals,
twists them along self-morphisms, and verifies the laws that hold in
the right Hom-alternative world -- power associativity, Hom-Jordan
admissibility, idempotent decompositions, multiplication-operator
identities -- both concretely (exhaustive basis sweeps, exact
arithmetic) and symbolically (in the free multiplicative Hom-algebra,
with machine-checked certificates).
"""

from .linalg import (
    Matrix,
    Scalar,
    Vector,
    char_poly,
    format_scalar,
    identity_matrix,
    inverse,
    kernel_basis,
    mat_mul,
    mat_pow,
    mat_vec,
    parse_scalar,
    qq,
    rank,
    solve,
    vec_mat,
)
from .core import (
    CheckReport,
    Element,
    HomAlgebra,
    algebra_from_json,
    algebra_to_json,
    apply_alpha,
    commutator,
    hom_associator,
    is_hom_alternative,
    is_hom_flexible,
    is_left_hom_alternative,
    is_multiplicative,
    is_right_hom_alternative,
    load_algebra,
    mul,
    random_element,
    save_algebra,
)
from .constructions import (
    AlbertParams,
    albert5_alpha,
    albert5_base,
    albert5_twisted,
    derived_algebra,
    hom_module_distinguish,
    plus_algebra,
    yau_twist,
)
from .powers import (
    PowerTable,
    check_nth_hom_power_associative,
    check_power_associativity_polarized,
    check_third_fourth_criterion,
    hom_power,
    hom_power_pair,
)
from .jordan import (
    check_hom_jordan,
    check_hom_jordan_admissible,
    jordan_defect,
)
from .idempotents import (
    Decomposition,
    albert_decomposition,
    decompose_element,
    idempotent_search,
    is_idempotent,
)
from .operators import (
    MulOperator,
    alpha_op,
    build_T,
    check_idempotent_operator_suite,
    check_mul_operator_identities,
    identity_op,
    is_alpha_n_idempotent,
    left_op,
    op_commutator,
    right_op,
)
from .symbolic import (
    HomMonomial,
    HomPolynomial,
    IdentityDef,
    check_identity_on_algebra,
    evaluate_polynomial,
    expand_associator,
    hom_teichmuller_terms,
    identity_defect,
    identity_registry,
    load_certificates,
    multilinearize,
    ra_polynomial,
    specialize_classical,
    teichmuller_f,
    var,
    verify_all_certificates,
    verify_certificate,
    verify_hom_teichmuller,
)
from .dsl import parse_identity, parse_monomial, parse_term, term_to_dsl

__version__ = "0.1.0"

__all__ = [
    "Matrix",
    "Scalar",
    "Vector",
    "char_poly",
    "format_scalar",
    "identity_matrix",
    "inverse",
    "kernel_basis",
    "mat_mul",
    "mat_pow",
    "mat_vec",
    "parse_scalar",
    "qq",
    "rank",
    "solve",
    "vec_mat",
    "CheckReport",
    "Element",
    "HomAlgebra",
    "algebra_from_json",
    "algebra_to_json",
    "apply_alpha",
    "commutator",
    "hom_associator",
    "is_hom_alternative",
    "is_hom_flexible",
    "is_left_hom_alternative",
    "is_multiplicative",
    "is_right_hom_alternative",
    "load_algebra",
    "mul",
    "random_element",
    "save_algebra",
    "AlbertParams",
    "albert5_alpha",
    "albert5_base",
    "albert5_twisted",
    "derived_algebra",
    "hom_module_distinguish",
    "plus_algebra",
    "yau_twist",
    "PowerTable",
    "check_nth_hom_power_associative",
    "check_power_associativity_polarized",
    "check_third_fourth_criterion",
    "hom_power",
    "hom_power_pair",
    "check_hom_jordan",
    "check_hom_jordan_admissible",
    "jordan_defect",
    "Decomposition",
    "albert_decomposition",
    "decompose_element",
    "idempotent_search",
    "is_idempotent",
    "MulOperator",
    "alpha_op",
    "build_T",
    "check_idempotent_operator_suite",
    "check_mul_operator_identities",
    "identity_op",
    "is_alpha_n_idempotent",
    "left_op",
    "op_commutator",
    "right_op",
    "HomMonomial",
    "HomPolynomial",
    "IdentityDef",
    "check_identity_on_algebra",
    "evaluate_polynomial",
    "expand_associator",
    "hom_teichmuller_terms",
    "identity_defect",
    "identity_registry",
    "load_certificates",
    "multilinearize",
    "ra_polynomial",
    "specialize_classical",
    "teichmuller_f",
    "var",
    "verify_all_certificates",
    "verify_certificate",
    "verify_hom_teichmuller",
    "parse_identity",
    "parse_monomial",
    "parse_term",
    "term_to_dsl",
    "__version__",
]
