"""Hilbert-Schmidt (Frobenius) inner products of a matrix against rank-one
operators built from frame elements, with exact operation accounting.

For T of shape m x n, g in C^m and h in C^n, the quantity computed
throughout is

    <T, g (x) conj(h)>_HS = sum_ij T[i,j] conj(g[i]) h[j] = <T h, g>,

the coefficient of T against the rank-one operator ``g (x) conj(h)``
(matrix ``g h^H``).  Four strategies are provided; each consumes a
documented exact number of complex scalar operations (see
:func:`op_count_formula`):

1. ``vec_pair``   - conjugate g, build the rank-one matrix, take a plain
                    bilinear dot against vec(T):       3mn + m - 1 per pair.
2. ``direct``     - apply T to h, inner product with g: 2mn + m - 1 per pair.
3. ``all_pairs``  - the sandwich C_G (T D_H) over whole frames:
                    L(2mn - m + 2mK - K) for all K*L pairs.
4. ``kron``       - a Kronecker matrix applied to vec(T):
                    KL(3mn - 1) for all pairs.

For full tables the sandwich wins (except for extreme aspect ratios); for
the diagonal k = l alone, ``direct`` is the cheapest, and is what
:func:`lower_symbol` uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .frames import Frame, FrameBounds, frame_bounds
from .linalg import (
    OpCount,
    as_matrix,
    as_vector,
    counted_inner,
    counted_kron,
    counted_matmat,
    counted_matvec,
    mat_cols,
    vec_cols,
)

__all__ = [
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
]


class HsMethod(Enum):
    VEC_PAIR = "vec-pair"
    DIRECT = "direct"
    ALL_PAIRS = "all-pairs"
    KRON = "kron"


@dataclass(frozen=True)
class HsInnerReport:
    """Outcome of one strategy: the value(s), the ops consumed, the method.

    ``value`` is a complex scalar for the per-pair strategies, an L x K table
    for ``all_pairs`` (row = right-frame index l, column = left-frame index
    k) and a stacked length-K*L vector for ``kron`` (entry ``k + l*K``).
    """

    value: complex | np.ndarray
    ops: int
    method: HsMethod


@dataclass(frozen=True)
class RankOne:
    """Rank-one operator ``left (x) conj(right)``: h -> <h, right> left."""

    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "left", as_vector(self.left))
        object.__setattr__(self, "right", as_vector(self.right))

    def matrix(self) -> np.ndarray:
        return rank_one_matrix(self.left, self.right)

    def apply(self, h) -> np.ndarray:
        h = as_vector(h)
        return complex(np.vdot(self.right, h)) * self.left


def rank_one_matrix(f, g, ctr: OpCount | None = None) -> np.ndarray:
    """Matrix of ``f (x) conj(g)``: entry (i, j) is ``f[i] * conj(g[j])``.

    Costs one complex multiply per entry (m*n total) when a counter is given;
    the conjugation is folded into the multiplies.
    """
    f = as_vector(f)
    g = as_vector(g)
    if ctr is not None:
        ctr.add(f.size * g.size)
    return np.outer(f, g.conj())


def _check_pair_shapes(T: np.ndarray, g: np.ndarray, h: np.ndarray) -> None:
    m, n = T.shape
    if g.size != m or h.size != n:
        raise ValueError(
            f"operator of shape {T.shape} pairs with g in C^{m} and h in C^{n}, "
            f"got lengths {g.size} and {h.size}"
        )


def hs_inner_vec_pair(T, g, h, ctr: OpCount | None = None) -> HsInnerReport:
    """Strategy 1: vectorize both sides, then one long dot product.

    Conjugates g as a standalone pass (m ops), builds the m x n array with
    entries ``conj(g[i]) * h[j]`` (mn multiplies) - entrywise the conjugate
    of the rank-one matrix - and accumulates the plain bilinear dot against
    vec(T) (mn multiplies, mn - 1 adds).  Total 3mn + m - 1.
    """
    T = as_matrix(T)
    g = as_vector(g)
    h = as_vector(h)
    _check_pair_shapes(T, g, h)
    if ctr is None:
        ctr = OpCount()
    m, n = T.shape
    ops = 0
    gbar = [z.conjugate() for z in g.tolist()]
    ops += m
    hl = h.tolist()
    tcols = T.T.tolist()  # tcols[j][i] = T[i, j]
    acc = 0j
    first = True
    for j in range(n):
        col = tcols[j]
        for i in range(m):
            entry = gbar[i] * hl[j]
            ops += 1
            term = col[i] * entry
            ops += 1
            if first:
                acc = term
                first = False
            else:
                acc += term
                ops += 1
    ctr.add(ops)
    return HsInnerReport(value=acc, ops=ops, method=HsMethod.VEC_PAIR)


def hs_inner_direct(T, g, h, ctr: OpCount | None = None) -> HsInnerReport:
    """Strategy 2: ``<T h, g>`` - a matvec then a length-m inner product.

    Total m(2n - 1) + (2m - 1) = 2mn + m - 1 operations.
    """
    T = as_matrix(T)
    g = as_vector(g)
    h = as_vector(h)
    _check_pair_shapes(T, g, h)
    if ctr is None:
        ctr = OpCount()
    before = ctr.count
    y = counted_matvec(T, h, ctr)
    value = counted_inner(y, g, ctr)
    return HsInnerReport(value=value, ops=ctr.count - before, method=HsMethod.DIRECT)


def hs_inner_all_pairs(T, G: Frame, H: Frame, ctr: OpCount | None = None) -> HsInnerReport:
    """Strategy 3: all K*L coefficients at once via the sandwich C_G (T D_H).

    Returns the L x K table with entry (l, k) = ``<T h_l, g_k>``.  Costs
    mL(2n - 1) for T D_H plus KL(2m - 1) for the left product, i.e.
    L(2mn - m + 2mK - K); materializing the analysis matrix C_G is an
    uncounted relabeling of the synthesis matrix.
    """
    T = as_matrix(T)
    m, n = T.shape
    if G.dim != m or H.dim != n:
        raise ValueError(
            f"operator of shape {T.shape} needs frames in C^{m} and C^{n}, "
            f"got C^{G.dim} and C^{H.dim}"
        )
    if ctr is None:
        ctr = OpCount()
    before = ctr.count
    TD = counted_matmat(T, H.synthesis, ctr)
    table_kl = counted_matmat(G.synthesis.conj().T, TD, ctr)
    return HsInnerReport(
        value=table_kl.T.copy(), ops=ctr.count - before, method=HsMethod.ALL_PAIRS
    )


def hs_inner_kron(T, G: Frame, H: Frame, ctr: OpCount | None = None) -> HsInnerReport:
    """Strategy 4: all pairs through one Kronecker matrix applied to vec(T).

    Builds ``transpose(D_H) (x) C_G`` (K*L by m*n, one multiply per entry:
    KmLn ops) and applies it to vec(T) (KL(2mn - 1) ops); total KL(3mn - 1).
    The result stacks the K x L table column-wise: entry ``k + l*K`` is
    ``<T h_l, g_k>``.
    """
    T = as_matrix(T)
    m, n = T.shape
    if G.dim != m or H.dim != n:
        raise ValueError(
            f"operator of shape {T.shape} needs frames in C^{m} and C^{n}, "
            f"got C^{G.dim} and C^{H.dim}"
        )
    if ctr is None:
        ctr = OpCount()
    before = ctr.count
    W = counted_kron(H.synthesis.T, G.synthesis.conj().T, ctr)
    stacked = counted_matvec(W, vec_cols(T), ctr)
    return HsInnerReport(value=stacked, ops=ctr.count - before, method=HsMethod.KRON)


def hs_inner_table(
    T,
    G: Frame,
    H: Frame,
    method: HsMethod = HsMethod.ALL_PAIRS,
    ctr: OpCount | None = None,
) -> HsInnerReport:
    """Full L x K coefficient table by any strategy; defaults to the sandwich.

    The sandwich is the cheapest full-table route, so it is the default;
    pass ``method`` to override.  Per-pair strategies are looped over all
    K*L pairs and their ops accumulate.  The table entry (l, k) is
    ``<T h_l, g_k>`` for every strategy.
    """
    if ctr is None:
        ctr = OpCount()
    if method is HsMethod.ALL_PAIRS:
        return hs_inner_all_pairs(T, G, H, ctr)
    before = ctr.count
    if method is HsMethod.KRON:
        stacked = hs_inner_kron(T, G, H, ctr).value
        table = mat_cols(stacked, G.count).T.copy()
        return HsInnerReport(value=table, ops=ctr.count - before, method=method)
    fn = hs_inner_vec_pair if method is HsMethod.VEC_PAIR else hs_inner_direct
    T = as_matrix(T)
    table = np.empty((H.count, G.count), dtype=np.complex128)
    for k in range(G.count):
        for l in range(H.count):
            table[l, k] = fn(T, G.synthesis[:, k], H.synthesis[:, l], ctr).value
    return HsInnerReport(value=table, ops=ctr.count - before, method=method)


def lower_symbol(T, gframe: Frame, fframe: Frame) -> np.ndarray:
    """Diagonal coefficient sequence ``sigma[k] = <T f_k, g_k>``.

    These are the coefficients of T against the rank-one family
    ``g_k (x) conj(f_k)``; each entry is evaluated by the direct strategy,
    the cheapest one for the diagonal alone.
    """
    T = as_matrix(T)
    m, n = T.shape
    if gframe.count != fframe.count:
        raise ValueError(f"frame counts differ: {gframe.count} vs {fframe.count}")
    if gframe.dim != m or fframe.dim != n:
        raise ValueError(
            f"operator of shape {T.shape} needs frames in C^{m} and C^{n}, "
            f"got C^{gframe.dim} and C^{fframe.dim}"
        )
    out = np.empty(gframe.count, dtype=np.complex128)
    for k in range(gframe.count):
        out[k] = np.vdot(gframe.synthesis[:, k], T @ fframe.synthesis[:, k])
    return out


@dataclass(frozen=True)
class FrameNormCheck:
    """Frame-sampled estimate of the HS norm together with its sandwich.

    ``value`` is sqrt(sum_k ||T f_k||^2); it always lies between
    sqrt(A) * ||T||_HS and sqrt(B) * ||T||_HS, with equality of both sides
    for tight frames.
    """

    value: float
    hs_norm: float
    bounds: FrameBounds

    @property
    def lower_edge(self) -> float:
        return float(np.sqrt(self.bounds.lower) * self.hs_norm)

    @property
    def upper_edge(self) -> float:
        return float(np.sqrt(self.bounds.upper) * self.hs_norm)

    def within_bounds(self, slack: float = 1e-9) -> bool:
        pad = slack * max(1.0, self.upper_edge)
        return self.lower_edge - pad <= self.value <= self.upper_edge + pad


def hs_norm_via_frame(T, frame: Frame) -> FrameNormCheck:
    """HS norm sampled through a frame: sqrt(sum_k ||T f_k||^2).

    Requires a frame for the whole space (rank d); the sampled value then
    brackets the true Frobenius norm via the sharp bounds.
    """
    T = as_matrix(T)
    d = frame.dim
    if T.shape != (d, d):
        raise ValueError(f"operator must be {d} x {d} to match the frame, got {T.shape}")
    b = frame_bounds(frame)
    if not b.is_frame:
        raise ValueError(
            f"sequence spans only a rank-{b.rank} subspace of C^{d}; "
            "the two-sided norm estimate needs a frame for the whole space"
        )
    value = float(np.linalg.norm(T @ frame.synthesis))
    hs_norm = float(np.linalg.norm(T))
    return FrameNormCheck(value=value, hs_norm=hs_norm, bounds=b)


def op_count_formula(method: HsMethod, m: int, n: int, K: int = 1, L: int = 1) -> int:
    """Exact operation count of each strategy.

    Per single pair for ``vec_pair`` and ``direct``; for all K*L pairs for
    ``all_pairs`` and ``kron``.
    """
    if method is HsMethod.VEC_PAIR:
        return 3 * m * n + m - 1
    if method is HsMethod.DIRECT:
        return 2 * m * n + m - 1
    if method is HsMethod.ALL_PAIRS:
        return L * (2 * m * n - m + 2 * m * K - K)
    if method is HsMethod.KRON:
        return K * L * (3 * m * n - 1)
    raise ValueError(f"unknown method {method!r}")
