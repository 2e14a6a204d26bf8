"""Greedy TEC cover algorithms and compression-factor accounting.

An encoding is an ordered list of TECs whose covered sets union to the
encoded dataset. Cover algorithms select TECs greedily, preferring high
compression factor; the compression factor of a TEC counts its pattern
points plus its stored (nonzero) translators against its covered set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .discovery import PatternNode, Tec, compute_tecs
from .geometry import PointSet


class CoverAlgorithm(enum.Enum):
    COSIATEC = "cosiatec"
    SIATEC_COMPRESS = "siateccompress"


@dataclass(frozen=True)
class Encoding:
    """Ordered list of TECs that losslessly covers a dataset."""

    tecs: tuple[Tec, ...]

    def __post_init__(self):
        tecs = tuple(self.tecs)
        if not tecs:
            raise ValueError("encoding must contain at least one TEC")
        dim = tecs[0].dimension
        for t in tecs:
            if t.dimension != dim:
                raise ValueError("all TECs in an encoding must share one dimension")
        object.__setattr__(self, "tecs", tecs)

    @property
    def dimension(self) -> int:
        return self.tecs[0].dimension

    def __len__(self) -> int:
        return len(self.tecs)

    def __iter__(self):
        return iter(self.tecs)


def pattern_point_set(node: PatternNode) -> PointSet:
    """Resolve a pattern node to its atomic point set, decoding if nested."""
    if isinstance(node, PointSet):
        return node
    return decode_encoding(node)


def covered_set(tec: Tec) -> PointSet:
    """Union of the pattern translated by every translator (zero included)."""
    pattern = pattern_point_set(tec.pattern)
    points = {
        tuple(a + b for a, b in zip(p, v))
        for v in tec.translators
        for p in pattern.points
    }
    return PointSet._from_sorted(tuple(sorted(points)), pattern.dimension)


def decode_encoding(encoding: Encoding) -> PointSet:
    """Recursively reconstruct the point set an encoding represents."""
    out = PointSet((), dimension=encoding.dimension)
    for tec in encoding:
        out = out.union(covered_set(tec))
    return out


def tec_storage_cost(tec: Tec) -> int:
    """Points plus nonzero translators needed to store the TEC, recursing
    into nested pattern encodings."""
    if tec.is_atomic:
        pattern_size = len(tec.pattern)
    else:
        pattern_size = encoding_size(tec.pattern)
    return pattern_size + len(tec.nonzero_translators)


def tec_compression_factor(tec: Tec) -> Fraction:
    """Covered-set size over pattern size plus stored translator count.

    The zero vector is never stored, so it does not count toward the
    denominator. The pattern counts as its atomic point set even when
    nested.
    """
    pattern = pattern_point_set(tec.pattern)
    return Fraction(len(covered_set(tec)), len(pattern) + len(tec.nonzero_translators))


def encoding_size(encoding: Encoding) -> int:
    return sum(tec_storage_cost(t) for t in encoding)


def encoding_compression_factor(encoding: Encoding, dataset: PointSet) -> Fraction:
    return Fraction(len(dataset), encoding_size(encoding))


def _quality_key(tec: Tec, covered: PointSet):
    pattern = pattern_point_set(tec.pattern)
    cf = Fraction(len(covered), len(pattern) + len(tec.nonzero_translators))
    return (-cf, -len(covered), -len(pattern), pattern.points)


def tec_quality_key(tec: Tec):
    """Sort key ranking TECs best-first: higher compression factor, then
    larger covered set, then larger pattern, then lexicographically smaller
    pattern. A deterministic total order."""
    return _quality_key(tec, covered_set(tec))


def cover_cosiatec(dataset: PointSet) -> Encoding:
    """Iterative best-TEC cover with disjoint covered sets.

    Repeatedly runs TEC discovery on the residual dataset, keeps the
    best-ranked TEC whose compression factor exceeds 1, and removes its
    covered set. Whatever cannot be compressed is appended as a final
    zero-translator TEC, so the covered sets partition the dataset.
    """
    if len(dataset) < 1:
        raise ValueError("dataset must contain at least one point")
    residual = dataset
    selected: list[Tec] = []
    while residual:
        best = None
        for tec in compute_tecs(residual):
            if len(tec.translators) < 2:
                continue
            covered = covered_set(tec)
            if len(covered) <= tec_storage_cost(tec):  # compression factor <= 1
                continue
            key = _quality_key(tec, covered)
            if best is None or key < best[0]:
                best = (key, tec, covered)
        if best is None:
            selected.append(Tec(residual, ()))
            break
        selected.append(best[1])
        residual = residual.difference(best[2])
    return Encoding(tuple(selected))


def cover_siatec_compress(dataset: PointSet) -> Encoding:
    """Single-pass cover: visit all TECs best-first, keep each one that
    newly covers at least 2 points for less than their count; overlaps
    are allowed and the uncovered remainder becomes a final TEC."""
    if len(dataset) < 1:
        raise ValueError("dataset must contain at least one point")
    scored = []
    for tec in compute_tecs(dataset):
        tec_covered = covered_set(tec)
        scored.append((_quality_key(tec, tec_covered), tec, tec_covered))
    scored.sort(key=lambda item: item[0])
    kept: list[Tec] = []
    covered = PointSet((), dimension=dataset.dimension)
    for _, tec, tec_covered in scored:
        newly = len(tec_covered.difference(covered))
        if newly >= 2 and tec_storage_cost(tec) < newly:
            kept.append(tec)
            covered = covered.union(tec_covered)
            if len(covered) == len(dataset):
                break
    residual = dataset.difference(covered)
    if residual:
        kept.append(Tec(residual, ()))
    return Encoding(tuple(kept))


_COVER_FUNCTIONS = {
    CoverAlgorithm.COSIATEC: cover_cosiatec,
    CoverAlgorithm.SIATEC_COMPRESS: cover_siatec_compress,
}


def run_cover(algorithm: CoverAlgorithm, dataset: PointSet) -> Encoding:
    return _COVER_FUNCTIONS[algorithm](dataset)
