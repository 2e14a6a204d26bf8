"""Removal of redundant translators from a TEC.

A translator is redundant when dropping it leaves the TEC's covered set
unchanged. Finding a smallest sufficient translator subset exactly would
take time exponential in the number of translators, so the pipeline uses
a greedy polynomial-time approximation:

1. count, for every covered point, how many translators reach it;
2. if no point is reached twice, nothing can be removed;
3. match the pattern against the multiply-reached points (a sorted vector
   table); translators that map the *entire* pattern onto such points are
   removable;
4. points reachable only via removable vectors ("maxpoints") would be lost
   if all removable vectors were dropped, so a small subset sufficient to
   keep every maxpoint covered is retained greedily.

The zero vector is never considered removable, so every result keeps its
pattern's own occurrence.
"""

from __future__ import annotations

from dataclasses import replace

from .cover import pattern_point_set
from .discovery import Tec
from .geometry import Point, Vector, add, zero_vector

FreqTable = list[tuple[int, Point]]
SiamTable = list[tuple[Vector, Point]]
MaxpointTable = list[tuple[Point, tuple[Vector, ...]]]
VectorMaxpointsList = list[tuple[Vector, frozenset[Point]]]


def _vectors_by_covered_point(tec: Tec) -> dict[Point, set[Vector]]:
    pattern = pattern_point_set(tec.pattern)
    reached: dict[Point, set[Vector]] = {}
    for v in tec.translators:
        for q in pattern:
            reached.setdefault(add(q, v), set()).add(v)
    return reached


def point_frequencies(tec: Tec) -> FreqTable:
    """(frequency, point) for every covered point, sorted lexicographically.

    The frequency of a point is the number of translators that map some
    pattern point onto it.
    """
    return sorted((len(vs), p) for p, vs in _vectors_by_covered_point(tec).items())


def max_frequency_is_one(freqs: FreqTable) -> bool:
    """True iff no covered point is reached twice; the table is sorted by
    frequency first, so only the last entry needs checking."""
    if not freqs:
        raise ValueError("frequency table must be non-empty")
    return freqs[-1][0] == 1


def siam_vector_table(tec: Tec, freqs: FreqTable) -> SiamTable:
    """Sorted table of (q - p, p) for every pattern point p and every
    multiply-reached covered point q. Runs of equal vector are the maximal
    matches of the pattern against those points."""
    pattern = pattern_point_set(tec.pattern)
    multipoints = [p for f, p in freqs if f > 1]
    table = [
        (tuple(a - b for a, b in zip(q, p)), p) for p in pattern for q in multipoints
    ]
    table.sort()
    return table


def maximal_matches(table: SiamTable) -> list[tuple[Vector, tuple[Point, ...]]]:
    """Group a sorted vector table into its runs of equal vector."""
    groups: list[tuple[Vector, tuple[Point, ...]]] = []
    i = 0
    while i < len(table):
        v = table[i][0]
        j = i
        while j < len(table) and table[j][0] == v:
            j += 1
        groups.append((v, tuple(p for _, p in table[i:j])))
        i = j
    return groups


def removable_vectors(tec: Tec, table: SiamTable) -> list[Vector]:
    """Translators that map the whole pattern onto multiply-reached points.

    A maximal match as large as the pattern means every pattern point
    lands on such a point. Only actual nonzero translators qualify: the
    table may contain vectors outside the translator set, and the zero
    vector is protected.
    """
    pattern_size = len(pattern_point_set(tec.pattern))
    zero = zero_vector(tec.dimension)
    eligible = set(tec.translators) - {zero}
    return sorted(
        v
        for v, points in maximal_matches(table)
        if len(points) == pattern_size and v in eligible
    )


def max_points(tec: Tec, removable: list[Vector], freqs: FreqTable) -> MaxpointTable:
    """Covered points reachable only via removable vectors, each paired
    with the removable vectors that reach it. Sorted by point."""
    removable_set = set(removable)
    multi = {p for f, p in freqs if f > 1}
    out = []
    for p, vs in _vectors_by_covered_point(tec).items():
        if p in multi and vs <= removable_set:
            out.append((p, tuple(sorted(vs))))
    out.sort()
    return out


def drop_all_removable(tec: Tec, removable: list[Vector]) -> Tec:
    """Remove every removable vector at once; only valid when there are no
    maxpoints, in which case the covered set is unaffected."""
    drop = set(removable)
    return replace(tec, translators=tuple(v for v in tec.translators if v not in drop))


def vector_maxpoint_pairs(maxpoints: MaxpointTable) -> VectorMaxpointsList:
    """For each removable vector, the set of maxpoints it reaches, largest
    set first (ties broken by ascending vector); vectors reaching no
    maxpoint are omitted."""
    by_vector: dict[Vector, set[Point]] = {}
    for p, removers in maxpoints:
        for v in removers:
            by_vector.setdefault(v, set()).add(p)
    pairs = [(v, frozenset(ps)) for v, ps in by_vector.items()]
    pairs.sort(key=lambda pair: (-len(pair[1]), pair[0]))
    return pairs


def retained_vectors(pairs: VectorMaxpointsList) -> tuple[Vector, ...]:
    """Greedy cover of the maxpoints: repeatedly keep the front vector,
    strike its maxpoints from the remaining entries, and drop entries that
    become empty, until none remain."""
    work = [(v, set(ps)) for v, ps in pairs]
    retained = []
    while work:
        v, covered = work[0]
        retained.append(v)
        work = [(u, ps - covered) for u, ps in work[1:] if ps - covered]
    return tuple(retained)


def rrt(tec: Tec) -> Tec:
    """Remove redundant translators without changing the covered set.

    Removable vectors that are not retained for maxpoint coverage are
    dropped. A TEC with a nested pattern is processed against its decoded
    point set and returned with the nested structure intact.
    """
    freqs = point_frequencies(tec)
    if max_frequency_is_one(freqs):
        return tec
    table = siam_vector_table(tec, freqs)
    removable = removable_vectors(tec, table)
    maxpoints = max_points(tec, removable, freqs)
    if not maxpoints:
        return drop_all_removable(tec, removable)
    keep = set(retained_vectors(vector_maxpoint_pairs(maxpoints)))
    drop = set(removable) - keep
    return replace(tec, translators=tuple(v for v in tec.translators if v not in drop))
