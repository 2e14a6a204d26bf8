"""Independent brute-force references used only by the tests.

These deliberately share nothing with the production code beyond the
geometry primitives, so they can act as oracles for it.
"""

from __future__ import annotations

from itertools import combinations

from teccover.discovery import Tec
from teccover.geometry import Point, PointSet, Vector, add, sub, zero_vector

MAX_ORACLE_POINTS = 30
MAX_ORACLE_TRANSLATORS = 12


def brute_force_mtps(dataset: PointSet) -> list[tuple[Vector, tuple[Point, ...]]]:
    """Group the origin of every ascending point pair by its difference
    vector: the vector's maximal translatable pattern."""
    if len(dataset) > MAX_ORACLE_POINTS:
        raise ValueError(f"oracle guard: |D| = {len(dataset)} > {MAX_ORACLE_POINTS}")
    grouped: dict[Vector, set[Point]] = {}
    for p in dataset:
        for q in dataset:
            if p < q:
                grouped.setdefault(sub(q, p), set()).add(p)
    return sorted((v, tuple(sorted(ps))) for v, ps in grouped.items())


def brute_force_covered_set(pattern_points, translators) -> frozenset:
    return frozenset(add(p, v) for p in pattern_points for v in translators)


def brute_force_tec_translators(pattern: PointSet, dataset: PointSet) -> tuple[Vector, ...]:
    """Every vector (a dataset-point difference or zero) that maps the whole
    pattern into the dataset."""
    if len(dataset) > MAX_ORACLE_POINTS:
        raise ValueError(f"oracle guard: |D| = {len(dataset)} > {MAX_ORACLE_POINTS}")
    members = set(dataset.points)
    candidates = {sub(q, p) for p in dataset for q in dataset}
    candidates.add(zero_vector(dataset.dimension))
    return tuple(
        sorted(v for v in candidates if all(add(p, v) in members for p in pattern))
    )


def brute_force_minimal_translators(tec: Tec) -> int:
    """Size of the smallest translator subset (zero kept) with the same
    covered set, by exhaustive search in increasing subset size."""
    pattern = tec.pattern
    assert isinstance(pattern, PointSet)
    zero = zero_vector(tec.dimension)
    nonzero = [v for v in tec.translators if v != zero]
    if len(nonzero) + 1 > MAX_ORACLE_TRANSLATORS:
        raise ValueError(
            f"oracle guard: |V| = {len(nonzero) + 1} > {MAX_ORACLE_TRANSLATORS}"
        )
    target = brute_force_covered_set(pattern, tec.translators)
    for size in range(0, len(nonzero) + 1):
        for chosen in combinations(nonzero, size):
            if brute_force_covered_set(pattern, (zero, *chosen)) == target:
                return size + 1
    raise AssertionError("the full translator set always reproduces the covered set")


def brute_force_frequencies(tec: Tec) -> dict[Point, int]:
    """Frequency of each covered point by direct double loop."""
    pattern = tec.pattern
    assert isinstance(pattern, PointSet)
    freq: dict[Point, int] = {}
    for v in tec.translators:
        for q in pattern:
            p = add(q, v)
            freq[p] = freq.get(p, 0) + 1
    return freq


def brute_force_siam_pairs(tec: Tec) -> list[tuple[Vector, Point]]:
    """All (q - p, p) pairs from pattern points to multiply-reached covered
    points, by direct enumeration."""
    pattern = tec.pattern
    assert isinstance(pattern, PointSet)
    freq = brute_force_frequencies(tec)
    multi = [q for q, f in freq.items() if f > 1]
    return sorted((sub(q, p), p) for p in pattern for q in multi)
