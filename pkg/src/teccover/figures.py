"""Render comparison figures for harness results.

One figure per algorithm plots the compression factor of every piece under
the four variants; a summary figure shows mean compression factor per
variant. Files are written next to the delimited output so a compare run
leaves both machine-readable rows and ready-to-view charts.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .harness import VARIANT_GRID, ResultRow, aggregate, variant_label

_VARIANT_STYLE = {
    (False, False): ("tab:orange", "o"),
    (True, False): ("tab:blue", "s"),
    (False, True): ("tab:green", "^"),
    (True, True): ("tab:red", "d"),
}


def save_cf_by_piece(rows: Iterable[ResultRow], out_path: Path) -> Path:
    """Line-and-marker chart of per-piece CF, one series per variant.

    All rows must belong to a single algorithm.
    """
    rows = list(rows)
    algorithms = {r.algorithm for r in rows}
    if len(algorithms) != 1:
        raise ValueError("expected rows for exactly one algorithm")
    algorithm = algorithms.pop()
    pieces = sorted({r.piece for r in rows})
    xs = range(len(pieces))
    fig, ax = plt.subplots(figsize=(max(6.0, 1.2 * len(pieces)), 4.0))
    for variant in VARIANT_GRID:
        cf = {r.piece: float(r.cf) for r in rows if r.variant == variant}
        color, marker = _VARIANT_STYLE[variant]
        ax.plot(
            xs,
            [cf[p] for p in pieces],
            color=color,
            marker=marker,
            label=variant_label(*variant),
        )
    ax.set_xticks(list(xs))
    ax.set_xticklabels(pieces, rotation=30, ha="right", fontsize=8)
    ax.set_ylabel("compression factor")
    ax.set_title(algorithm.value)
    ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return Path(out_path)


def save_variant_means(rows: Iterable[ResultRow], out_path: Path) -> Path:
    """Grouped bars of mean CF per variant, one group per algorithm."""
    stats = [s for s in aggregate(rows) if s.algorithm is not None]
    algorithms = sorted({s.algorithm.value for s in stats})
    width = 0.8 / len(VARIANT_GRID)
    fig, ax = plt.subplots(figsize=(1.5 + 2.2 * len(algorithms), 4.0))
    for vi, variant in enumerate(VARIANT_GRID):
        means = [
            next(
                s.mean_cf
                for s in stats
                if s.algorithm.value == alg and (s.use_recursia, s.use_rrt) == variant
            )
            for alg in algorithms
        ]
        color, _ = _VARIANT_STYLE[variant]
        offsets = [i + (vi - 1.5) * width for i in range(len(algorithms))]
        ax.bar(offsets, means, width=width, color=color, label=variant_label(*variant))
    ax.set_xticks(range(len(algorithms)))
    ax.set_xticklabels(algorithms)
    ax.set_ylabel("mean compression factor")
    ax.legend(fontsize=8)
    ax.grid(True, axis="y", alpha=0.3)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return Path(out_path)


def save_report_figures(rows: Iterable[ResultRow], out_dir: Path) -> list[Path]:
    """Write every comparison figure for `rows` into `out_dir`."""
    rows = list(rows)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for algorithm in sorted({r.algorithm for r in rows}, key=lambda a: a.value):
        path = out_dir / f"cf_by_piece_{algorithm.value}.png"
        written.append(
            save_cf_by_piece([r for r in rows if r.algorithm is algorithm], path)
        )
    written.append(save_variant_means(rows, out_dir / "cf_variant_means.png"))
    return written
