"""Generalized Reed-Solomon codec with tree-based soft-decision decoding."""

from .gf import DEFAULT_POLYS, FieldCtx, OpCounter
from .grs import (
    ErrorEstimate,
    GrsCode,
    elp_eep_of,
    encode,
    forney_values,
    generator_poly,
    hamming_distance,
    is_codeword,
    syndrome,
    syndrome_consistent,
    unit_multipliers,
)
from .groebner import (
    LEFT,
    RIGHT,
    GroebnerPairBasis,
    Monomial2,
    PolyPair,
    compare_w,
    koetter_step,
    koetter_update,
    lm_w,
    monomial_less,
    solve_key_equation,
)
from .kernels import (
    KERNELS,
    CoeffKernel,
    CompactKernel,
    DegreeGuardError,
    EdgeMod,
    EvalKernel,
    PairKernel,
    get_kernel,
    truncated_product_eval,
)
from .poly import MINUS_INFINITY, Poly
from .tree import (
    Candidate,
    CandidateList,
    ChaseConfig,
    build_tree,
    candidate_condition,
    extract_candidate,
    gmd_traverse,
    hard_decision_estimate,
    stopping_criterion,
    traverse,
    verify_indirect_hit,
)
from .channel import (
    QSymmetricChannel,
    ReliabilityInfo,
    SoftSymmetricChannel,
    pick_unreliable,
    select_best,
)
from .oracle import brute_min_module_element, naive_chase, naive_truncated_eval
from .pipeline import DecodeReport, decode_frame

__version__ = "0.1.0"
