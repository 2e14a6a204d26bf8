"""Maximal translatable patterns and their translational equivalence classes.

Given a dataset D, the maximal translatable pattern of a nonzero vector v is
MTP(v) = {p in D | p + v in D}. The translational equivalence class (TEC) of
a pattern P is the pair (P, V) where V is the set of every vector v with
P + v a subset of D; V always includes the zero vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, NamedTuple, Union

from .geometry import Point, PointSet, Vector, zero_vector

if TYPE_CHECKING:  # pragma: no cover - import cycle guard, typing only
    from .cover import Encoding

PatternNode = Union[PointSet, "Encoding"]


class MtpEntry(NamedTuple):
    vector: Vector
    pattern: PointSet


@dataclass(frozen=True)
class Tec:
    """A pattern (atomic point set or nested encoding) plus its translators.

    Translators are kept sorted, duplicate-free, and always include the zero
    vector; the zero vector is implicit in serialized form.
    """

    pattern: PatternNode
    translators: tuple[Vector, ...]

    def __post_init__(self):
        pattern = self.pattern
        if isinstance(pattern, PointSet):
            if not pattern:
                raise ValueError("TEC pattern must be non-empty")
            dim = pattern.dimension
        else:
            dim = pattern.dimension
        vs = {tuple(int(c) for c in v) for v in self.translators}
        vs.add(zero_vector(dim))
        for v in vs:
            if len(v) != dim:
                raise ValueError(f"translator {v} does not match pattern dimension {dim}")
        object.__setattr__(self, "translators", tuple(sorted(vs)))

    @property
    def dimension(self) -> int:
        return self.pattern.dimension

    @property
    def is_atomic(self) -> bool:
        return isinstance(self.pattern, PointSet)

    @property
    def nonzero_translators(self) -> tuple[Vector, ...]:
        zero = zero_vector(self.dimension)
        return tuple(v for v in self.translators if v != zero)


def compute_mtps(dataset: PointSet) -> list[MtpEntry]:
    """List the MTP of every distinct nonzero inter-point vector of `dataset`.

    Only lexicographically positive vectors occur (v = q - p with p < q);
    the zero vector is excluded because its MTP is the whole dataset.
    Entries are sorted by vector. Built from the sorted table of all
    pairwise difference vectors, grouping equal vectors.
    """
    if len(dataset) < 1:
        raise ValueError("dataset must contain at least one point")
    pts = dataset.points
    table: list[tuple[Vector, Point]] = []
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            table.append((tuple(a - b for a, b in zip(q, p)), p))
    table.sort()
    entries: list[MtpEntry] = []
    i = 0
    while i < len(table):
        v = table[i][0]
        j = i
        while j < len(table) and table[j][0] == v:
            j += 1
        pattern = PointSet._from_sorted(
            tuple(origin for _, origin in table[i:j]), dataset.dimension
        )
        entries.append(MtpEntry(v, pattern))
        i = j
    return entries


def compute_tecs(dataset: PointSet) -> list[Tec]:
    """Compute the TEC of each distinct MTP pattern of `dataset`.

    Patterns that are equal as sets but arise from different vectors are
    merged. For each pattern the full translator set is found by testing
    the candidate vectors q - p0 (p0 the pattern's first point) against the
    dataset, which keeps the whole computation sub-quartic. Output is
    sorted by pattern.
    """
    if len(dataset) < 1:
        raise ValueError("dataset must contain at least one point")
    members = set(dataset.points)
    patterns = {entry.pattern for entry in compute_mtps(dataset)}
    tecs = []
    for pattern in sorted(patterns, key=lambda ps: ps.points):
        first = pattern[0]
        rest = pattern.points[:0:-1]  # reversed tail: large points fail fastest
        translators = []
        for q in dataset:
            v = tuple(a - b for a, b in zip(q, first))
            if all(tuple(a + b for a, b in zip(p, v)) in members for p in rest):
                translators.append(v)
        tecs.append(Tec(pattern, tuple(translators)))
    return tecs
