"""File emitters for verification artifacts: CSV/DOT text plus a rendered
Cayley-table heatmap."""

from __future__ import annotations

import os
from typing import Optional

from .basis import CayleyTable


def write_cayley_files(table: CayleyTable, out_base: str) -> dict:
    """Write <base>.csv, <base>.dot and <base>.png; returns the paths."""
    paths = {"csv": out_base + ".csv", "dot": out_base + ".dot",
             "png": out_base + ".png"}
    with open(paths["csv"], "w") as fh:
        fh.write(table.to_csv())
    with open(paths["dot"], "w") as fh:
        fh.write(table.to_dot())
    cayley_figure(table, paths["png"])
    return paths


def cayley_figure(table: CayleyTable, path: str) -> None:
    """Render the Cayley table as a heatmap of product-index positions."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    idx = table.indices
    pos = {i: n for n, i in enumerate(idx)}
    matrix = [[pos[c] for c in row] for row in table.rows]
    n = len(idx)
    size = max(4.0, min(14.0, 0.3 * n))
    fig, ax = plt.subplots(figsize=(size, size))
    im = ax.imshow(matrix, cmap="viridis", interpolation="nearest")
    labels = [i.literal() for i in idx]
    if n <= 40:
        ax.set_xticks(range(n))
        ax.set_yticks(range(n))
        ax.set_xticklabels(labels, rotation=90, fontsize=6)
        ax.set_yticklabels(labels, fontsize=6)
    ax.set_title("Cayley table (%d basis elements)" % n)
    fig.colorbar(im, ax=ax, label="product index position")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
