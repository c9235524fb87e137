"""Exact symbolic engine for Virasoro singular vectors and Witt-algebra cohomology.

The package constructs the closed-form singular vectors of Verma modules
V(h, c) over the Virasoro algebra for the labels with min(p, q) <= 2,
verifies singularity symbolically over the field Q(t), and uses the
specialized operators at t = -3/2 to compute Lie algebra cohomology of
graded modules over the positive Witt algebra.
"""

from .errors import (
    DivisionByZero,
    Inhomogeneous,
    NormalizationFailure,
    NotLaurent,
    PoleAtEvaluationPoint,
    SizeCapExceeded,
    UnsupportedLabel,
    VirasoroError,
)
from .rational import (
    BigRational,
    RF_ONE,
    RF_T,
    RF_ZERO,
    RationalFunction,
    UniPoly,
    evaluate_at,
    extreme_terms,
    format_rational,
    parse_rational,
    rf_arith,
)
from .verma import (
    CENTER,
    ModuleParams,
    VermaElement,
    apply_generator,
    first_difference,
    grade,
    level,
    monomial_str,
    word_to_element,
)
from .singular import (
    DEFAULT_CAP,
    CompositionSum,
    KacLabel,
    all_twos_coefficient,
    annihilated_to_depth,
    apply_sum,
    build_s2p,
    build_sp1,
    compositions,
    is_singular,
    kac_params,
    normalize_w,
    recursion_vectors,
    recursion_w,
    s2p_coefficient,
    sp1_coefficient,
    specialize,
    swap_t,
)
from .resolution import (
    CohomologyRow,
    CohomologyTable,
    GradedAction,
    IdentityResult,
    ResolutionReport,
    T_RESOLUTION,
    TensorDensityAction,
    build_spq_at,
    check_action_consistency,
    cohomology_dims,
    d_matrix,
    delta_entries,
    delta_level_bookkeeping,
    exact_rank,
    pentagonal,
    sigma,
    trivial_action,
    verify_cochain,
    verify_resolution_identities,
)

__version__ = "0.1.0"
