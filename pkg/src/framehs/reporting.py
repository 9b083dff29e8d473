"""Run reports and file emitters for the command-line tools.

Reports serialize with a fixed key order so two runs on the same inputs
produce byte-identical output except for the wall-clock field.  Heatmaps
are written both as dependency-free 8-bit PGM (P5) files and, through
matplotlib, as PNG figures rendered alongside the delimited output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .matio import format_entry

__all__ = [
    "RunReport",
    "write_pgm",
    "save_heatmap_figure",
    "save_panel_figure",
]


def _jsonable(value):
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, float):
        return value
    if isinstance(value, complex):
        return format_entry(value)
    if isinstance(value, np.generic):
        return _jsonable(value.item())
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in value]
    return str(value)


@dataclass
class RunReport:
    """What a command ran on, what it wrote, and what it measured."""

    command: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    metrics: dict = field(default_factory=dict)
    wall_time_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": _jsonable(self.inputs),
            "outputs": _jsonable(self.outputs),
            "metrics": _jsonable(self.metrics),
            "wall_time_ms": self.wall_time_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def write_pgm(path, values) -> None:
    """Write ``|values|`` as a max-normalized 8-bit binary PGM (P5) image."""
    mag = np.abs(np.asarray(values, dtype=np.complex128))
    if mag.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {mag.shape}")
    peak = float(mag.max())
    if peak == 0.0:
        peak = 1.0
    img = np.round(255.0 * mag / peak).astype(np.uint8)
    h, w = img.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(img.tobytes())


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def save_heatmap_figure(path, values, title: str = "") -> None:
    """Render ``|values|`` as a single PNG heatmap."""
    plt = _pyplot()
    mag = np.abs(np.asarray(values, dtype=np.complex128))
    fig, ax = plt.subplots(figsize=(4.8, 4.0))
    im = ax.imshow(mag, cmap="viridis", interpolation="nearest")
    fig.colorbar(im, ax=ax, fraction=0.046)
    if title:
        ax.set_title(title)
    ax.set_xlabel("column")
    ax.set_ylabel("row")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_panel_figure(path, panels) -> None:
    """Render a grid of labelled heatmaps; ``panels`` is [(title, matrix), ...]."""
    plt = _pyplot()
    k = len(panels)
    ncols = 2 if k > 1 else 1
    nrows = (k + ncols - 1) // ncols
    fig, axes = plt.subplots(nrows, ncols, figsize=(4.6 * ncols, 3.9 * nrows))
    axes = np.atleast_1d(axes).ravel()
    for ax in axes[k:]:
        ax.axis("off")
    for ax, (title, values) in zip(axes, panels):
        mag = np.abs(np.asarray(values, dtype=np.complex128))
        im = ax.imshow(mag, cmap="viridis", interpolation="nearest")
        fig.colorbar(im, ax=ax, fraction=0.046)
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
