"""
modplab - exhaustive checks for mod-p Galois representations and finite matrix groups.

The engines verify, on every instance small enough to enumerate, that
residual representations built from rank-one Breuil modules with tame
descent data are never r-regular, and decide the group-theoretic lemmas
about regular elements and characteristic-polynomial annihilation.

Basic usage:
    from modplab import parse_rep, is_r_regular

    rep = parse_rep("1:0,1:4,1:8", p=11)
    is_r_regular(rep, 1)
"""

# Exponent arithmetic and residual representations
from .tame_arith import (
    ExponentClass,
    TameParams,
    digits,
    frobenius_twist,
    is_primitive,
    norm_to_niveau1,
    teichmuller_twist,
)
from .breuil_rank_one import (
    Niveau1Profile,
    RankOneData,
    enumerate_profiles,
    from_profile,
    generic_fiber_exponent,
    profile_kappa,
    validate,
)
from .residual_reps import (
    InducedSummand,
    ResidualRep,
    det_inertia_exponent,
    is_r_regular,
    parse_rep,
    rep_exponents,
)

# Theorem verification
from .feasibility import (
    InertialType,
    TheoremInstance,
    VerificationReport,
    attainable_exponents,
    check_hypotheses,
    exhaustive_verify,
    theorem_verdict,
    verify_all_types,
)

from .config import SCHEMA_VERSION, LabConfig
from .exceptions import (
    BudgetExceededError,
    CapExceededError,
    GeneratorFileError,
    HomomorphismError,
    InvariantError,
    ModpLabError,
    ParameterError,
    PreconditionError,
    ProfileRangeError,
    ResourceCapError,
)

__version__ = "0.1.0"

__all__ = [
    # Exponent arithmetic
    "TameParams",
    "ExponentClass",
    "digits",
    "frobenius_twist",
    "is_primitive",
    "norm_to_niveau1",
    "teichmuller_twist",

    # Rank-one Breuil modules
    "RankOneData",
    "Niveau1Profile",
    "validate",
    "generic_fiber_exponent",
    "from_profile",
    "profile_kappa",
    "enumerate_profiles",

    # Residual representations
    "InducedSummand",
    "ResidualRep",
    "parse_rep",
    "rep_exponents",
    "is_r_regular",
    "det_inertia_exponent",

    # Theorem verification
    "InertialType",
    "TheoremInstance",
    "VerificationReport",
    "check_hypotheses",
    "theorem_verdict",
    "attainable_exponents",
    "exhaustive_verify",
    "verify_all_types",

    # Configuration
    "LabConfig",
    "SCHEMA_VERSION",

    # Exceptions
    "ModpLabError",
    "ParameterError",
    "ProfileRangeError",
    "GeneratorFileError",
    "PreconditionError",
    "HomomorphismError",
    "ResourceCapError",
    "CapExceededError",
    "BudgetExceededError",
    "InvariantError",
]
