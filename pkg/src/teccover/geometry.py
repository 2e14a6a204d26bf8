"""Exact integer point and vector arithmetic over k-dimensional point sets.

Points and translation vectors are plain tuples of Python ints, so
lexicographic comparison, hashing and exactness come for free. A
:class:`PointSet` is an immutable, lexicographically sorted, duplicate-free
sequence of points of uniform dimension.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterable, Iterator

Point = tuple[int, ...]
Vector = tuple[int, ...]


class DimensionError(ValueError):
    """Raised when operands of a geometric operation disagree on dimension."""


def zero_vector(dimension: int) -> Vector:
    return (0,) * dimension


def add(p: Point, v: Vector) -> Point:
    if len(p) != len(v):
        raise DimensionError(f"cannot add {len(v)}-d vector to {len(p)}-d point")
    return tuple(a + b for a, b in zip(p, v))


def sub(q: Point, p: Point) -> Vector:
    if len(q) != len(p):
        raise DimensionError(f"cannot subtract {len(p)}-d point from {len(q)}-d point")
    return tuple(a - b for a, b in zip(q, p))


def negate(v: Vector) -> Vector:
    return tuple(-a for a in v)


class PointSet:
    """Sorted, duplicate-free set of uniform-dimension integer points.

    Instances are immutable; every operation returns a new set. The empty
    set has dimension ``None`` and is compatible with any dimension.
    """

    __slots__ = ("points", "dimension")

    points: tuple[Point, ...]
    dimension: int | None

    def __init__(self, points: Iterable[Point] = (), dimension: int | None = None):
        pts = sorted(set(tuple(int(c) for c in p) for p in points))
        for p in pts:
            if dimension is None:
                dimension = len(p)
            elif len(p) != dimension:
                raise DimensionError(
                    f"point {p} has dimension {len(p)}, expected {dimension}"
                )
        object.__setattr__(self, "points", tuple(pts))
        object.__setattr__(self, "dimension", dimension)

    @classmethod
    def _from_sorted(cls, points: tuple[Point, ...], dimension: int | None) -> "PointSet":
        # Internal fast path: `points` must already be sorted and unique.
        self = object.__new__(cls)
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "dimension", dimension)
        return self

    def __setattr__(self, name, value):
        raise AttributeError("PointSet is immutable")

    def _check_dim(self, length: int, what: str) -> None:
        if self.dimension is not None and length != self.dimension:
            raise DimensionError(f"{what} has dimension {length}, expected {self.dimension}")

    def translate(self, v: Vector) -> "PointSet":
        """Return ``{p + v for p in self}``.

        Translation preserves lexicographic order, so no re-sort is needed.
        """
        self._check_dim(len(v), f"vector {v}")
        return PointSet._from_sorted(
            tuple(tuple(a + b for a, b in zip(p, v)) for p in self.points),
            self.dimension or len(v),
        )

    def union(self, other: "PointSet") -> "PointSet":
        self._merge_check(other)
        dim = self.dimension if self.dimension is not None else other.dimension
        merged = sorted(set(self.points) | set(other.points))
        return PointSet._from_sorted(tuple(merged), dim)

    def difference(self, other: "PointSet") -> "PointSet":
        self._merge_check(other)
        drop = set(other.points)
        return PointSet._from_sorted(
            tuple(p for p in self.points if p not in drop), self.dimension
        )

    def issubset(self, other: "PointSet") -> bool:
        self._merge_check(other)
        return set(self.points) <= set(other.points)

    def _merge_check(self, other: "PointSet") -> None:
        if (
            self.dimension is not None
            and other.dimension is not None
            and self.dimension != other.dimension
        ):
            raise DimensionError(
                f"point sets of dimension {self.dimension} and {other.dimension}"
            )

    def __contains__(self, p: Point) -> bool:
        i = bisect_left(self.points, p)
        return i < len(self.points) and self.points[i] == p

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __bool__(self) -> bool:
        return bool(self.points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self) -> str:
        return f"PointSet({list(self.points)!r})"
