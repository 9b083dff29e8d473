"""Dense complex linear algebra: Frobenius inner product, column-stacking,
Kronecker products, an SVD pseudoinverse, and operation-counted kernels.

The counted kernels are deliberately plain loop implementations that tally
one unit per complex scalar operation as it executes:

* one count per complex multiplication,
* one count per complex addition,
* one count per standalone complex conjugation.

A conjugation that is fused into an inner-product multiply is absorbed into
that multiply and not counted separately; only an explicit conjugation pass
over a vector is charged.  Under this convention the tallies satisfy exact
closed forms: an inner product of length-p vectors costs 2p - 1, a (p x q)
matrix-vector product costs p(2q - 1), a (p x q)(q x r) matrix product costs
pr(2q - 1), and a (p x q) (x) (r x s) Kronecker product costs pqrs.  The
counted kernels exist to verify those identities; use numpy directly for
throughput.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "OpCount",
    "as_matrix",
    "as_vector",
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
]

_EPS = float(np.finfo(np.float64).eps)


class OpCount:
    """Mutable tally of complex scalar operations.

    The count never decreases while a kernel runs; ``reset`` rewinds it to
    zero between kernel calls.
    """

    __slots__ = ("count",)

    def __init__(self, count: int = 0):
        if count < 0:
            raise ValueError("operation count must be non-negative")
        self.count = int(count)

    def add(self, n: int) -> None:
        if n < 0:
            raise ValueError("operation count can only grow")
        self.count += int(n)

    def reset(self) -> None:
        self.count = 0

    def __repr__(self) -> str:
        return f"OpCount({self.count})"

    def __eq__(self, other) -> bool:
        if isinstance(other, OpCount):
            return self.count == other.count
        if isinstance(other, int):
            return self.count == other
        return NotImplemented


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a 2-d complex128 array with nonzero dimensions."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a matrix, got array of shape {m.shape}")
    if m.shape[0] == 0 or m.shape[1] == 0:
        raise ValueError(f"matrix dimensions must be positive, got {m.shape}")
    return m


def as_vector(a) -> np.ndarray:
    """Coerce ``a`` to a 1-d complex128 array with nonzero length."""
    v = np.asarray(a, dtype=np.complex128)
    if v.ndim == 2 and 1 in v.shape:
        v = v.reshape(-1)
    if v.ndim != 1:
        raise ValueError(f"expected a vector, got array of shape {v.shape}")
    if v.size == 0:
        raise ValueError("vector must be non-empty")
    return v


def frobenius_inner(A, B) -> complex:
    """Frobenius inner product ``sum_ij A[i,j] * conj(B[i,j])``.

    Linear in ``A``, conjugate-linear in ``B``.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch: {A.shape} vs {B.shape}")
    # vdot conjugates its first argument
    return complex(np.vdot(B, A))


def vec_cols(M) -> np.ndarray:
    """Stack the columns of ``M`` into one vector: ``vec(M)[i + j*rows] = M[i, j]``."""
    return as_matrix(M).reshape(-1, order="F")


def mat_cols(x, rows: int) -> np.ndarray:
    """Inverse of :func:`vec_cols`: cut ``x`` into columns of height ``rows``.

    ``mat_cols(x, rows)[i, j] = x[i + j*rows]``; requires ``len(x)`` to be a
    multiple of ``rows``.
    """
    x = as_vector(x)
    rows = int(rows)
    if rows < 1:
        raise ValueError("rows must be positive")
    if x.size % rows:
        raise ValueError(
            f"vector of length {x.size} cannot be cut into columns of height {rows}"
        )
    return x.reshape(rows, -1, order="F")


def kronecker(A, B) -> np.ndarray:
    """Kronecker product with the standard block layout.

    ``C[i, j] = A[i // r, j // s] * B[i % r, j % s]`` for ``B`` of shape
    ``(r, s)``, i.e. block ``(u, v)`` of the result equals ``A[u, v] * B``.
    """
    return np.kron(as_matrix(A), as_matrix(B))


def pinv(M, rel_tol: float | None = None) -> np.ndarray:
    """Moore-Penrose pseudoinverse via SVD with relative truncation.

    Singular values at or below ``rel_tol * sigma_max`` are treated as zero.
    ``rel_tol`` defaults to ``max(rows, cols)`` times machine epsilon.
    Raises ``numpy.linalg.LinAlgError`` if the SVD fails to converge.
    """
    M = as_matrix(M)
    if rel_tol is None:
        rel_tol = max(M.shape) * _EPS
    if rel_tol < 0:
        raise ValueError("rel_tol must be >= 0")
    U, s, Vh = np.linalg.svd(M, full_matrices=False)
    keep = s > rel_tol * s[0]
    U, s, Vh = U[:, keep], s[keep], Vh[keep]
    return (Vh.conj().T / s) @ U.conj().T if s.size else np.zeros(M.T.shape, dtype=np.complex128)


def counted_inner(x, y, ctr: OpCount) -> complex:
    """Inner product ``<x, y> = sum_k x[k] * conj(y[k])`` with op tally.

    Charges ``p`` multiplies and ``p - 1`` additions for length-``p`` inputs;
    the conjugation of ``y`` is folded into each multiply.  Total ``2p - 1``.
    """
    x = as_vector(x)
    y = as_vector(y)
    if x.size != y.size:
        raise ValueError(f"length mismatch: {x.size} vs {y.size}")
    xs = x.tolist()
    ys = y.tolist()
    ops = 0
    acc = xs[0] * ys[0].conjugate()
    ops += 1
    for k in range(1, len(xs)):
        term = xs[k] * ys[k].conjugate()
        ops += 1
        acc += term
        ops += 1
    ctr.add(ops)
    return acc


def counted_matvec(A, x, ctr: OpCount) -> np.ndarray:
    """Matrix-vector product ``A @ x`` with op tally ``p(2q - 1)``."""
    A = as_matrix(A)
    x = as_vector(x)
    p, q = A.shape
    if x.size != q:
        raise ValueError(f"shape mismatch: {A.shape} @ ({x.size},)")
    rows = A.tolist()
    xs = x.tolist()
    ops = 0
    out = []
    for row in rows:
        acc = row[0] * xs[0]
        ops += 1
        for j in range(1, q):
            acc += row[j] * xs[j]  # one multiply + one add
            ops += 2
        out.append(acc)
    ctr.add(ops)
    return np.array(out, dtype=np.complex128)


def counted_matmat(A, B, ctr: OpCount) -> np.ndarray:
    """Matrix product ``A @ B`` with op tally ``p * r * (2q - 1)``."""
    A = as_matrix(A)
    B = as_matrix(B)
    p, q = A.shape
    q2, r = B.shape
    if q != q2:
        raise ValueError(f"shape mismatch: {A.shape} @ {B.shape}")
    arows = A.tolist()
    bcols = B.T.tolist()
    ops = 0
    out = np.empty((p, r), dtype=np.complex128)
    for i in range(p):
        arow = arows[i]
        for j in range(r):
            bcol = bcols[j]
            acc = arow[0] * bcol[0]
            ops += 1
            for k in range(1, q):
                acc += arow[k] * bcol[k]  # one multiply + one add
                ops += 2
            out[i, j] = acc
    ctr.add(ops)
    return out


def counted_kron(A, B, ctr: OpCount) -> np.ndarray:
    """Kronecker product with op tally ``p * q * r * s`` (one multiply per entry)."""
    A = as_matrix(A)
    B = as_matrix(B)
    p, q = A.shape
    r, s = B.shape
    arows = A.tolist()
    brows = B.tolist()
    ops = 0
    out = np.empty((p * r, q * s), dtype=np.complex128)
    for i in range(p):
        for j in range(q):
            a = arows[i][j]
            for k in range(r):
                brow = brows[k]
                for l in range(s):
                    out[i * r + k, j * s + l] = a * brow[l]
                    ops += 1
    ctr.add(ops)
    return out


def counted_conj(x, ctr: OpCount) -> np.ndarray:
    """Standalone conjugation pass over a vector, one count per entry."""
    x = as_vector(x)
    ctr.add(x.size)
    return x.conj()
