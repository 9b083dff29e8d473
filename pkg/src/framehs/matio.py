"""CSV files holding complex matrices and vectors.

One matrix row per line, comma-separated entries, no header.  Entries are
plain reals (``1.5``) or complex literals in the form ``re+imj`` / ``re-imj``
(``1.5-0.25j``).  Vectors are single-column files.  Writers use 17
significant digits so a write/read round trip reproduces every float bit.
"""

from __future__ import annotations

import numpy as np

from .linalg import as_matrix, as_vector

__all__ = [
    "MatrixFileError",
    "format_entry",
    "load_matrix",
    "save_matrix",
    "load_vector",
    "save_vector",
]


class MatrixFileError(ValueError):
    """Unparseable matrix file; message carries ``path:line:column``."""

    def __init__(self, path, line: int, column: int, detail: str):
        super().__init__(f"{path}:{line}:{column}: {detail}")
        self.path = str(path)
        self.line = line
        self.column = column
        self.detail = detail


def format_entry(z) -> str:
    """Render one complex entry; pure reals drop the imaginary part."""
    z = complex(z)
    if z.imag == 0.0:
        return f"{z.real:.17g}"
    return f"{z.real:.17g}{z.imag:+.17g}j"


def load_matrix(path) -> np.ndarray:
    """Read a complex matrix from ``path``; errors carry line/column."""
    rows: list[list[complex]] = []
    width = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            entries = []
            for colno, token in enumerate(line.split(","), start=1):
                token = token.strip()
                if not token:
                    raise MatrixFileError(path, lineno, colno, "empty entry")
                try:
                    entries.append(complex(token))
                except ValueError:
                    raise MatrixFileError(
                        path, lineno, colno,
                        f"cannot parse {token!r} as a complex number",
                    ) from None
            if width is None:
                width = len(entries)
            elif len(entries) != width:
                raise MatrixFileError(
                    path, lineno, 1,
                    f"row has {len(entries)} entries, expected {width}",
                )
            rows.append(entries)
    if not rows:
        raise MatrixFileError(path, 1, 1, "file holds no matrix rows")
    return np.array(rows, dtype=np.complex128)


def save_matrix(path, M) -> None:
    M = as_matrix(M)
    with open(path, "w", encoding="utf-8") as fh:
        for row in M:
            fh.write(",".join(format_entry(z) for z in row))
            fh.write("\n")


def load_vector(path) -> np.ndarray:
    """Read a single-column CSV as a vector."""
    m = load_matrix(path)
    if m.shape[1] != 1:
        raise MatrixFileError(
            path, 1, 1, f"expected a single-column vector file, got {m.shape[1]} columns"
        )
    return m[:, 0]


def save_vector(path, x) -> None:
    x = as_vector(x)
    with open(path, "w", encoding="utf-8") as fh:
        for z in x:
            fh.write(format_entry(z))
            fh.write("\n")
