"""Batch evaluation: each cover algorithm in four variants over a corpus.

Every piece is encoded in its basic form, with recursive pattern encoding,
with redundant-translator removal, and with both, and the compression
factor of each run is reported per piece and in aggregate. Each encoding
is decoded and checked against its input before a row is emitted.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, TextIO

from . import codec
from .cover import (
    CoverAlgorithm,
    Encoding,
    decode_encoding,
    encoding_size,
    run_cover,
)
from .geometry import PointSet
from .recursia import recursia
from .rrt import rrt

CSV_HEADER = ["piece", "algorithm", "recursia", "rrt", "n_points", "encoding_size", "cf", "ms"]

VARIANT_GRID = ((False, False), (False, True), (True, False), (True, True))


@dataclass(frozen=True)
class RunConfig:
    algorithm: CoverAlgorithm
    use_recursia: bool = False
    use_rrt: bool = False
    corpus: Path | None = None


@dataclass(frozen=True)
class ResultRow:
    piece: str
    algorithm: CoverAlgorithm
    use_recursia: bool
    use_rrt: bool
    n_points: int
    encoding_size: int
    cf: Fraction
    ms: float

    @property
    def variant(self) -> tuple[bool, bool]:
        return (self.use_recursia, self.use_rrt)


def encode_dataset(config: RunConfig, dataset: PointSet, *, only_if_smaller: bool = False) -> Encoding:
    """Produce the encoding for one variant: plain cover, cover with RRT
    applied to every TEC, recursive cover, or recursive cover with RRT at
    every level."""
    if config.use_recursia:
        return recursia(
            config.algorithm,
            dataset,
            apply_rrt=config.use_rrt,
            only_if_smaller=only_if_smaller,
        )
    encoding = run_cover(config.algorithm, dataset)
    if config.use_rrt:
        encoding = Encoding(tuple(rrt(t) for t in encoding))
    return encoding


def run_pipeline(
    config: RunConfig, dataset: PointSet, piece: str = "-"
) -> tuple[Encoding, ResultRow]:
    """Encode one dataset under one variant and report its result row.

    The encoding is decoded and compared against the input before the row
    is produced; a mismatch is a bug and raises.
    """
    start = time.perf_counter()
    encoding = encode_dataset(config, dataset)
    ms = (time.perf_counter() - start) * 1000.0
    if decode_encoding(encoding) != dataset:
        raise AssertionError(f"{piece}: encoding failed to decode back to its input")
    size = encoding_size(encoding)
    row = ResultRow(
        piece=piece,
        algorithm=config.algorithm,
        use_recursia=config.use_recursia,
        use_rrt=config.use_rrt,
        n_points=len(dataset),
        encoding_size=size,
        cf=Fraction(len(dataset), size),
        ms=ms,
    )
    return encoding, row


def load_corpus(corpus_dir: Path) -> list[tuple[str, PointSet]]:
    """Parse every non-hidden file in a directory as a dataset; parse
    failures are re-raised with the piece name attached."""
    corpus_dir = Path(corpus_dir)
    if not corpus_dir.is_dir():
        raise codec.ParseError(f"corpus path is not a directory: {corpus_dir}")
    pieces = []
    for path in sorted(corpus_dir.iterdir()):
        if path.name.startswith(".") or not path.is_file():
            continue
        try:
            dataset = codec.parse_dataset(path.read_text(encoding="utf-8"))
        except codec.ParseError as exc:
            raise codec.ParseError(f"{path.name}: {exc}") from None
        pieces.append((path.name, dataset.points))
    if not pieces:
        raise codec.ParseError(f"no dataset files in corpus directory: {corpus_dir}")
    return pieces


def run_corpus(
    corpus_dir: Path, algorithms: Iterable[CoverAlgorithm]
) -> list[ResultRow]:
    """Run the full 2x2 variant grid for each algorithm over each piece."""
    rows = []
    for piece, points in load_corpus(corpus_dir):
        for algorithm in algorithms:
            for use_recursia, use_rrt in VARIANT_GRID:
                config = RunConfig(algorithm, use_recursia, use_rrt)
                _, row = run_pipeline(config, points, piece)
                rows.append(row)
    rows.sort(key=lambda r: (r.piece, r.algorithm.value, r.use_recursia, r.use_rrt))
    return rows


def write_csv(rows: Iterable[ResultRow], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            [
                row.piece,
                row.algorithm.value,
                int(row.use_recursia),
                int(row.use_rrt),
                row.n_points,
                row.encoding_size,
                f"{float(row.cf):.6g}",
                f"{row.ms:.3f}",
            ]
        )


@dataclass(frozen=True)
class VariantStats:
    """Aggregate for one (algorithm, variant) cell; `algorithm` is None for
    the all-algorithms aggregate. Percent changes are reported both as the
    mean of per-piece CF ratios and as the ratio of mean CFs; both are None
    for the base variant."""

    algorithm: CoverAlgorithm | None
    use_recursia: bool
    use_rrt: bool
    pieces: int
    mean_cf: float
    pct_mean_of_ratios: float | None
    pct_ratio_of_means: float | None


def aggregate(rows: Iterable[ResultRow]) -> list[VariantStats]:
    """Mean CF per variant, per algorithm and overall, with percent change
    against each algorithm's base variant."""
    rows = list(rows)
    if not rows:
        raise ValueError("no result rows to aggregate")
    by_cell: dict[tuple, dict[tuple[str, CoverAlgorithm], Fraction]] = {}
    for row in rows:
        cell = by_cell.setdefault(row.variant, {})
        key = (row.piece, row.algorithm)
        if key in cell:
            raise ValueError(f"duplicate row for {key} variant {row.variant}")
        cell[key] = row.cf
    base = by_cell.get((False, False))
    if base is None:
        raise ValueError("missing base-variant rows")
    for variant in VARIANT_GRID:
        if set(by_cell.get(variant, {})) != set(base):
            raise ValueError(f"variant grid incomplete for variant {variant}")

    algorithms = sorted({alg for _, alg in base}, key=lambda a: a.value)
    groups: list[tuple[CoverAlgorithm | None, list[tuple[str, CoverAlgorithm]]]] = [
        (alg, [k for k in base if k[1] is alg]) for alg in algorithms
    ]
    if len(algorithms) > 1:
        groups.append((None, list(base)))

    stats = []
    for algorithm, keys in groups:
        for variant in VARIANT_GRID:
            cell = by_cell[variant]
            mean_cf = sum(cell[k] for k in keys) / len(keys)
            if variant == (False, False):
                pct_ratios = pct_means = None
            else:
                mean_ratio = sum(cell[k] / base[k] for k in keys) / len(keys)
                base_mean = sum(base[k] for k in keys) / len(keys)
                pct_ratios = float((mean_ratio - 1) * 100)
                pct_means = float((mean_cf / base_mean - 1) * 100)
            stats.append(
                VariantStats(
                    algorithm=algorithm,
                    use_recursia=variant[0],
                    use_rrt=variant[1],
                    pieces=len(keys),
                    mean_cf=float(mean_cf),
                    pct_mean_of_ratios=pct_ratios,
                    pct_ratio_of_means=pct_means,
                )
            )
    return stats


def variant_label(use_recursia: bool, use_rrt: bool) -> str:
    if use_recursia and use_rrt:
        return "recursia+rrt"
    if use_recursia:
        return "recursia"
    if use_rrt:
        return "rrt"
    return "base"


def format_summary(stats: Iterable[VariantStats]) -> str:
    """Human-readable aggregate table, one line per (algorithm, variant)."""
    lines = []
    for s in stats:
        scope = s.algorithm.value if s.algorithm is not None else "overall"
        line = (
            f"{scope:>14}  {variant_label(s.use_recursia, s.use_rrt):>12}  "
            f"pieces={s.pieces}  mean_cf={s.mean_cf:.4f}"
        )
        if s.pct_mean_of_ratios is not None:
            line += (
                f"  vs_base={s.pct_mean_of_ratios:+.1f}%"
                f" (ratio of means {s.pct_ratio_of_means:+.1f}%)"
            )
        lines.append(line)
    return "\n".join(lines) + "\n"
