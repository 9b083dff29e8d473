"""Finite frames, Hilbert-Schmidt inner products with exact operation
tallies, and best approximation of matrices by frame multipliers."""

from .frames import (
    Frame,
    FrameBounds,
    analysis,
    canonical_dual,
    cross_gram,
    frame_bounds,
    frame_operator,
    gram,
    is_tight,
    synthesis,
)
from .gabor import GaborExperiment, GaborSystem, gabor_frame, gabor_identity_experiment, gauss_window
from .hs import (
    FrameNormCheck,
    HsInnerReport,
    HsMethod,
    RankOne,
    hs_inner_all_pairs,
    hs_inner_direct,
    hs_inner_kron,
    hs_inner_table,
    hs_inner_vec_pair,
    hs_norm_via_frame,
    lower_symbol,
    op_count_formula,
    rank_one_matrix,
)
from .linalg import (
    OpCount,
    counted_conj,
    counted_inner,
    counted_kron,
    counted_matmat,
    counted_matvec,
    frobenius_inner,
    kronecker,
    mat_cols,
    pinv,
    vec_cols,
)
from .matio import MatrixFileError, load_matrix, load_vector, save_matrix, save_vector
from .multiplier import (
    IdentityMultiplierReport,
    MultiplierApproximation,
    apply_multiplier,
    best_multiplier_approx,
    hs_gram,
    identity_multiplier_diagnosis,
    multiplier_matrix,
    project_onto_frame_sequence,
)

__version__ = "0.1.0"

__all__ = [
    "Frame",
    "FrameBounds",
    "analysis",
    "synthesis",
    "frame_operator",
    "gram",
    "cross_gram",
    "frame_bounds",
    "canonical_dual",
    "is_tight",
    "OpCount",
    "frobenius_inner",
    "vec_cols",
    "mat_cols",
    "kronecker",
    "pinv",
    "counted_inner",
    "counted_matvec",
    "counted_matmat",
    "counted_kron",
    "counted_conj",
    "HsMethod",
    "HsInnerReport",
    "RankOne",
    "rank_one_matrix",
    "hs_inner_vec_pair",
    "hs_inner_direct",
    "hs_inner_all_pairs",
    "hs_inner_kron",
    "hs_inner_table",
    "lower_symbol",
    "hs_norm_via_frame",
    "FrameNormCheck",
    "op_count_formula",
    "MultiplierApproximation",
    "IdentityMultiplierReport",
    "apply_multiplier",
    "multiplier_matrix",
    "hs_gram",
    "best_multiplier_approx",
    "project_onto_frame_sequence",
    "identity_multiplier_diagnosis",
    "GaborSystem",
    "GaborExperiment",
    "gauss_window",
    "gabor_frame",
    "gabor_identity_experiment",
    "MatrixFileError",
    "load_matrix",
    "save_matrix",
    "load_vector",
    "save_vector",
    "__version__",
]
