"""Finite frames in C^d, stored through their synthesis matrix.

A frame here is any finite sequence of vectors g_0, ..., g_{K-1} in C^d,
kept as the d x K matrix D whose columns are the elements.  Analysis maps a
vector to its coefficients ``<f, g_k>`` (rows of D^H applied to f), synthesis
maps coefficients back to ``sum_k c_k g_k``, and the frame operator
S = D D^H governs the sharp constants A, B in

    A ||f||^2  <=  sum_k |<f, g_k>|^2  <=  B ||f||^2

valid for f in the span of the elements.  Sequences whose span is a proper
subspace are first-class: bounds are then sharp on the span only, and
:class:`FrameBounds` reports the rank so callers can tell a frame for all of
C^d from a frame sequence (upper bound only on the full space).
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass

import numpy as np

from .linalg import as_matrix, as_vector, pinv

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
]

_EPS = float(np.finfo(np.float64).eps)


@dataclass(frozen=True)
class Frame:
    """Sequence of ``count`` vectors in C^dim; column k of ``synthesis`` is element k.

    Zero columns are legal (they are valid Bessel elements); pass
    ``strict=True`` to reject them at construction.
    """

    synthesis: np.ndarray
    strict: InitVar[bool] = False

    def __post_init__(self, strict: bool):
        m = as_matrix(self.synthesis).copy()
        if strict:
            norms = np.linalg.norm(m, axis=0)
            if np.any(norms == 0.0):
                zero = int(np.flatnonzero(norms == 0.0)[0])
                raise ValueError(f"strict frame rejects all-zero element at column {zero}")
        if not np.all(np.isfinite(m.view(np.float64))):
            raise ValueError("frame elements must be finite")
        m.setflags(write=False)
        object.__setattr__(self, "synthesis", m)

    @property
    def dim(self) -> int:
        return self.synthesis.shape[0]

    @property
    def count(self) -> int:
        return self.synthesis.shape[1]

    def element(self, k: int) -> np.ndarray:
        return self.synthesis[:, k].copy()


@dataclass(frozen=True)
class FrameBounds:
    """Sharp bounds on the span of the elements.

    ``lower`` is the smallest nonzero eigenvalue of the frame operator,
    ``upper`` the largest.  When ``rank < dim`` the sequence spans a proper
    subspace: the lower bound holds only there, and on all of C^dim only the
    upper (Bessel) bound applies.
    """

    lower: float
    upper: float
    rank: int
    dim: int
    count: int

    @property
    def is_frame(self) -> bool:
        """True when the elements span all of C^dim."""
        return self.rank == self.dim

    @property
    def ratio(self) -> float:
        return self.upper / self.lower


def analysis(frame: Frame, f) -> np.ndarray:
    """Coefficient sequence ``c[k] = <f, g_k> = sum_i f[i] * conj(g_k[i])``."""
    f = as_vector(f)
    if f.size != frame.dim:
        raise ValueError(f"vector length {f.size} does not match frame dimension {frame.dim}")
    return frame.synthesis.conj().T @ f


def synthesis(frame: Frame, coeffs) -> np.ndarray:
    """Weighted element sum ``sum_k c_k g_k``."""
    c = as_vector(coeffs)
    if c.size != frame.count:
        raise ValueError(f"coefficient length {c.size} does not match frame count {frame.count}")
    return frame.synthesis @ c


def frame_operator(frame: Frame) -> np.ndarray:
    """S = D D^H, the Hermitian PSD operator with ``S f = sum_k <f, g_k> g_k``."""
    D = frame.synthesis
    return D @ D.conj().T


def gram(frame: Frame) -> np.ndarray:
    """Gram matrix D^H D; entry (j, m) is ``<g_m, g_j>``."""
    D = frame.synthesis
    return D.conj().T @ D


def cross_gram(first: Frame, second: Frame) -> np.ndarray:
    """Cross-Gram of two sequences in the same space.

    Entry (j, m) is the inner product of the second sequence's element m
    against the first sequence's element j, i.e.
    ``cross_gram(F, G)[j, m] = <G_m, F_j>``; ``cross_gram(F, F) == gram(F)``.
    """
    if first.dim != second.dim:
        raise ValueError(f"frames live in different spaces: C^{first.dim} vs C^{second.dim}")
    return first.synthesis.conj().T @ second.synthesis


def frame_bounds(frame: Frame) -> FrameBounds:
    """Sharp bounds from the singular values of the synthesis matrix.

    The squared singular values of D are the eigenvalues of S; the smallest
    nonzero one is the sharp lower constant on the span, the largest the
    sharp upper constant.  Raises on an all-zero synthesis matrix.
    """
    D = frame.synthesis
    s = np.linalg.svd(D, compute_uv=False)
    if s[0] == 0.0:
        raise ValueError("zero synthesis matrix has no frame bounds")
    cutoff = max(D.shape) * _EPS * s[0]
    nonzero = s[s > cutoff]
    rank = int(nonzero.size)
    return FrameBounds(
        lower=float(nonzero[-1] ** 2),
        upper=float(nonzero[0] ** 2),
        rank=rank,
        dim=frame.dim,
        count=frame.count,
    )


def canonical_dual(frame: Frame, rel_tol: float | None = None) -> Frame:
    """Dual sequence with synthesis matrix ``pinv(D)^H``.

    For a frame of all of C^d this is ``S^{-1} D`` (elements S^{-1} g_k) and
    reconstruction holds both ways; for a frame sequence the pseudoinverse
    computes the dual within the span.  The dual's bounds are (1/B, 1/A).
    """
    return Frame(pinv(frame.synthesis, rel_tol).conj().T)


def is_tight(frame: Frame, rel_tol: float = 1e-8) -> bool:
    """True when the sharp bounds agree to ``(B - A)/B <= rel_tol``."""
    b = frame_bounds(frame)
    return (b.upper - b.lower) / b.upper <= rel_tol
