"""Frame multipliers and the best diagonal approximation of a matrix.

A multiplier with analysis frame (g_k) in C^n, synthesis frame (f_k) in C^m
and symbol sigma acts as

    x  ->  sum_k sigma_k <x, g_k> f_k,

i.e. analysis, entrywise multiplication, synthesis; its matrix is
``sum_k sigma_k f_k g_k^H = D_F diag(sigma) D_G^H``.  The multipliers for a
fixed frame pair form the span of the rank-one family ``R_k = f_k (x)
conj(g_k)``, so the best Frobenius-norm approximation of a matrix T by a
multiplier is the orthogonal projection of T onto that span.  It is obtained
without ever constructing dual elements of the rank-one family: project the
coefficients ``beta_k = <T, R_k>_HS = <T g_k, f_k>`` (the lower symbol)
through the pseudoinverse of the family's Gram matrix

    (G_HS)[l, k] = <R_k, R_l>_HS = <f_k, f_l> <g_l, g_k>,

which for a shared frame (f_k) = (g_k) collapses to ``|<g_k, g_l>|^2``.
The pseudoinverse picks the minimum-norm symbol whenever the rank-one
family is linearly dependent.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .frames import Frame, FrameBounds, analysis, frame_bounds, frame_operator, gram, is_tight
from .hs import lower_symbol
from .linalg import as_matrix, as_vector, pinv

__all__ = [
    "MultiplierApproximation",
    "IdentityMultiplierReport",
    "apply_multiplier",
    "multiplier_matrix",
    "hs_gram",
    "best_multiplier_approx",
    "project_onto_frame_sequence",
    "identity_multiplier_diagnosis",
]

_EPS = float(np.finfo(np.float64).eps)


def _check_counts(sigma: np.ndarray, gframe: Frame, fframe: Frame) -> None:
    if not (sigma.size == gframe.count == fframe.count):
        raise ValueError(
            f"symbol length {sigma.size} and frame counts "
            f"{gframe.count}, {fframe.count} must all agree"
        )


def apply_multiplier(sigma, gframe: Frame, fframe: Frame, x) -> np.ndarray:
    """Apply the multiplier: ``sum_k sigma_k <x, g_k> f_k``."""
    sigma = as_vector(sigma)
    x = as_vector(x)
    _check_counts(sigma, gframe, fframe)
    return fframe.synthesis @ (sigma * analysis(gframe, x))


def multiplier_matrix(sigma, gframe: Frame, fframe: Frame) -> np.ndarray:
    """Dense matrix of the multiplier: ``D_F diag(sigma) D_G^H`` (m x n)."""
    sigma = as_vector(sigma)
    _check_counts(sigma, gframe, fframe)
    return (fframe.synthesis * sigma) @ gframe.synthesis.conj().T


def hs_gram(gframe: Frame, fframe: Frame | None = None) -> np.ndarray:
    """Gram matrix of the rank-one family ``f_k (x) conj(g_k)``.

    Entry (l, k) is ``<f_k, f_l> <g_l, g_k>``.  With a single shared frame
    (``fframe`` omitted or identical) the specialized form ``|<g_k, g_l>|^2``
    is used.  Hermitian positive semidefinite either way.
    """
    gg = gram(gframe)
    if fframe is None or fframe is gframe:
        return np.abs(gg) ** 2
    if fframe.count != gframe.count:
        raise ValueError(f"frame counts differ: {gframe.count} vs {fframe.count}")
    return gram(fframe) * gg.T


@dataclass(frozen=True)
class MultiplierApproximation:
    """Best multiplier fit of a target matrix.

    ``approximant = multiplier_matrix(upper_symbol, ...)`` is the orthogonal
    projection of the target onto the span of the rank-one family, and
    ``residual_fro`` is measured from that explicit matrix.
    """

    upper_symbol: np.ndarray
    approximant: np.ndarray
    residual_fro: float
    lower_symbol: np.ndarray
    hs_gram: np.ndarray


def best_multiplier_approx(
    T,
    gframe: Frame,
    fframe: Frame | None = None,
    pinv_tol: float | None = None,
) -> MultiplierApproximation:
    """Best Frobenius-norm approximation of T by a multiplier.

    ``gframe`` supplies the analysis side in C^n, ``fframe`` the synthesis
    side in C^m (defaults to ``gframe``).  The symbol solves the normal
    equations of the projection through ``pinv(hs_gram)``, whose truncation
    tolerance defaults to K times machine epsilon (relative to the largest
    singular value); near-degenerate rank-one families (e.g. repeated
    elements) are handled by the minimum-norm property of the pseudoinverse.
    """
    T = as_matrix(T)
    if fframe is None:
        fframe = gframe
    if T.shape != (fframe.dim, gframe.dim):
        raise ValueError(
            f"target shape {T.shape} does not match synthesis dimension "
            f"{fframe.dim} and analysis dimension {gframe.dim}"
        )
    if pinv_tol is None:
        pinv_tol = gframe.count * _EPS
    beta = lower_symbol(T, fframe, gframe)
    G = hs_gram(gframe, fframe)
    sigma = pinv(G, pinv_tol) @ beta
    TA = multiplier_matrix(sigma, gframe, fframe)
    return MultiplierApproximation(
        upper_symbol=sigma,
        approximant=TA,
        residual_fro=float(np.linalg.norm(T - TA)),
        lower_symbol=beta,
        hs_gram=G,
    )


def project_onto_frame_sequence(f, frame: Frame, pinv_tol: float | None = None) -> np.ndarray:
    """Orthogonal projection of f onto the span of the frame elements.

    Computed as ``D pinv(D^H D) D^H f``, which avoids forming any dual
    elements; idempotent and self-adjoint.
    """
    f = as_vector(f)
    if f.size != frame.dim:
        raise ValueError(f"vector length {f.size} does not match frame dimension {frame.dim}")
    return frame.synthesis @ (pinv(gram(frame), pinv_tol) @ analysis(frame, f))


@dataclass(frozen=True)
class IdentityMultiplierReport:
    """Can the identity be written as a multiplier for this frame?

    ``symbol``/``residual`` describe the best unconstrained fit.  The
    constant-symbol fields describe the best fit of the form c * ones:
    that residual vanishes exactly when the frame is tight, in which case
    c = 1/A.
    """

    is_identity_representable: bool
    symbol: np.ndarray
    is_tight: bool
    residual: float
    constant_symbol: float
    constant_residual: float
    bounds: FrameBounds


def identity_multiplier_diagnosis(frame: Frame, rel_tol: float = 1e-10) -> IdentityMultiplierReport:
    """Diagnose whether the identity is a multiplier for ``frame``.

    Runs the best-approximation algorithm on the identity with the frame on
    both sides and reports the residual relative to ||I|| = sqrt(d).  The
    best constant symbol c minimizes ||I - c S|| over scalars
    (c = trace(S)/||S||^2, real and positive for a nonzero frame); comparing
    its residual against zero realizes the tightness test from the constant
    -symbol side.
    """
    d = frame.dim
    fit = best_multiplier_approx(np.eye(d), frame, frame)
    b = frame_bounds(frame)
    S = frame_operator(frame)
    s_sq = float(np.linalg.norm(S)) ** 2
    c = float(np.trace(S).real) / s_sq
    constant_residual = float(np.linalg.norm(np.eye(d) - c * S))
    return IdentityMultiplierReport(
        is_identity_representable=bool(fit.residual_fro <= rel_tol * np.sqrt(d)),
        symbol=fit.upper_symbol,
        is_tight=is_tight(frame),
        residual=fit.residual_fro,
        constant_symbol=c,
        constant_residual=constant_residual,
        bounds=b,
    )
