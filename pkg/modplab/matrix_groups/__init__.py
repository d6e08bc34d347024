"""Exact linear algebra over small finite fields and the group lemma checks."""

from .closure import (
    GeneratedGroup,
    PairElement,
    RepresentationPair,
    closure,
    generated_subgroup,
    is_irreducible,
    spin,
)
from .field import FieldSpec, FiniteField, default_modulus, field_of_order, get_field
from .io import (
    load_generators,
    load_pair,
    matrix_from_json,
    parse_generators,
    parse_pair,
)
from .lemmas import (
    CheckResult,
    LemmaReport,
    annihilation_holds,
    charpoly_family,
    det_agreement,
    find_annihilation_failure,
    find_hypothesis_violation,
    find_intertwiner,
    find_kernel_violation,
    is_regular_generated,
    kernel_containment,
    regular_determinant_agreement,
    regular_subgroup,
    union_of_kernels,
    verify_regular_lemma,
)
from .matrix import (
    SquareMatrix,
    char_poly,
    det,
    diagonal,
    general_linear_group,
    has_cyclic_vector,
    identity,
    is_regular,
    is_unipotent,
    mat_inverse,
    mat_mul,
    min_poly,
    poly_at_matrix,
    scalar,
)
from .monomial import build_monomial_induction, cyclic_shift
from .weights import admissible_weights

__all__ = [
    # fields
    "FieldSpec",
    "FiniteField",
    "default_modulus",
    "field_of_order",
    "get_field",
    # matrices
    "SquareMatrix",
    "char_poly",
    "det",
    "diagonal",
    "general_linear_group",
    "has_cyclic_vector",
    "identity",
    "is_regular",
    "is_unipotent",
    "mat_inverse",
    "mat_mul",
    "min_poly",
    "poly_at_matrix",
    "scalar",
    # groups
    "GeneratedGroup",
    "PairElement",
    "RepresentationPair",
    "closure",
    "generated_subgroup",
    "is_irreducible",
    "spin",
    # lemmas
    "CheckResult",
    "LemmaReport",
    "annihilation_holds",
    "charpoly_family",
    "det_agreement",
    "find_annihilation_failure",
    "find_hypothesis_violation",
    "find_intertwiner",
    "find_kernel_violation",
    "is_regular_generated",
    "kernel_containment",
    "regular_determinant_agreement",
    "regular_subgroup",
    "union_of_kernels",
    "verify_regular_lemma",
    # constructions
    "build_monomial_induction",
    "cyclic_shift",
    "admissible_weights",
    # files
    "load_generators",
    "load_pair",
    "matrix_from_json",
    "parse_generators",
    "parse_pair",
]
