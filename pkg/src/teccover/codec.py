"""Text formats: dataset files and encoding documents.

Dataset files hold one point per line, coordinates separated by whitespace
or commas; lines starting with ``#`` are header/comment lines. Decimal
values are allowed: each dimension is scaled by the smallest power of ten
that makes every value in that column integral, and the scale is recorded
so output can be rendered back in original units.

Encoding documents are canonical JSON: ``dimension``, per-dimension
``scale`` divisors (top level only), and a ``tecs`` list where each TEC has
``translators`` (zero vector omitted) and a ``pattern`` that is either
``{"points": [...]}`` or ``{"encoding": {...}}`` for a nested document.
Canonical serialization sorts points and translators, so equal encodings
serialize to identical bytes and parse/serialize round-trips exactly.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .cover import Encoding, decode_encoding
from .discovery import Tec
from .geometry import PointSet, zero_vector

__all__ = [
    "Dataset",
    "ParseError",
    "parse_dataset",
    "format_dataset",
    "parse_encoding",
    "serialize_encoding",
    "decode_encoding",
    "dataset_in_original_units",
]


class ParseError(ValueError):
    """Malformed dataset file or encoding document; the message carries the
    offending line number or document path."""


@dataclass(frozen=True)
class Dataset:
    """A parsed dataset: integer points plus the per-dimension power-of-ten
    divisors that map them back to original units."""

    points: PointSet
    scale: tuple[int, ...]


def _fraction(token: str, lineno: int) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"line {lineno}: not a number: {token!r}") from None


def _pow10_exponent(value: Fraction, lineno: int) -> int:
    """Smallest e such that value * 10**e is integral."""
    den = value.denominator
    e = 0
    for factor in (2, 5):
        count = 0
        while den % factor == 0:
            den //= factor
            count += 1
        e = max(e, count)
    if den != 1:
        raise ParseError(f"line {lineno}: {value} is not a decimal number")
    return e


def parse_dataset(text: str) -> Dataset:
    """Parse dataset text into integer points and per-dimension scales.

    Duplicate points collapse; ragged rows, non-numeric tokens, and files
    with no data lines are rejected with the line number.
    """
    rows: list[tuple[int, list[Fraction]]] = []
    dimension = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        tokens = body.replace(",", " ").split()
        if not tokens:
            raise ParseError(f"line {lineno}: no coordinates on line")
        values = [_fraction(tok, lineno) for tok in tokens]
        if dimension is None:
            dimension = len(values)
        elif len(values) != dimension:
            raise ParseError(
                f"line {lineno}: expected {dimension} coordinates, got {len(values)}"
            )
        rows.append((lineno, values))
    if not rows:
        raise ParseError("line 1: no data lines in dataset")
    assert dimension is not None
    exponents = [
        max(_pow10_exponent(values[d], lineno) for lineno, values in rows)
        for d in range(dimension)
    ]
    scale = tuple(10**e for e in exponents)
    points = [
        tuple(int(v * s) for v, s in zip(values, scale)) for _, values in rows
    ]
    return Dataset(PointSet(points), scale)


def _render_coordinate(coord: int, scale: int) -> str:
    if scale == 1:
        return str(coord)
    digits = len(str(scale)) - 1
    sign = "-" if coord < 0 else ""
    whole, rem = divmod(abs(coord), scale)
    frac = str(rem).zfill(digits).rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"


def format_dataset(points: PointSet, scale: tuple[int, ...] | None = None) -> str:
    """Render points as canonical dataset text (original units, LF lines)."""
    dim = points.dimension or len(scale or ())
    if scale is None:
        scale = (1,) * (dim or 1)
    lines = [f"# dimension: {dim}", "# scale: " + " ".join(str(s) for s in scale)]
    for p in points:
        lines.append(" ".join(_render_coordinate(c, s) for c, s in zip(p, scale)))
    return "\n".join(lines) + "\n"


def dataset_in_original_units(points: PointSet, scale: tuple[int, ...]) -> frozenset:
    """The points as tuples of exact fractions in original units, for
    comparing datasets that were ingested with different scales."""
    return frozenset(
        tuple(Fraction(c, s) for c, s in zip(p, scale)) for p in points
    )


def format_fraction(value: Fraction) -> str:
    """Decimal text for an exact fraction (falls back to ``p/q`` when the
    denominator is not a product of 2s and 5s)."""
    scale = 1
    while (value * scale).denominator != 1:
        if scale >= 10**30:
            return str(value)
        scale *= 10
    return _render_coordinate(int(value * scale), scale)


def _encoding_to_obj(encoding: Encoding, scale: tuple[int, ...] | None) -> dict:
    obj: dict = {"dimension": encoding.dimension}
    if scale is not None:
        obj["scale"] = list(scale)
    tecs = []
    for tec in encoding:
        if tec.is_atomic:
            pattern_obj = {"points": [list(p) for p in tec.pattern]}
        else:
            pattern_obj = {"encoding": _encoding_to_obj(tec.pattern, None)}
        tecs.append(
            {
                "pattern": pattern_obj,
                "translators": [list(v) for v in tec.nonzero_translators],
            }
        )
    obj["tecs"] = tecs
    return obj


_INT_ARRAY = re.compile(r"\[\s+(-?\d+(?:,\s+-?\d+)*)\s+\]")


def serialize_encoding(encoding: Encoding, scale: tuple[int, ...] | None = None) -> str:
    """Canonical JSON text for an encoding; zero translators are omitted.

    Indented two spaces, keys sorted, with innermost integer arrays
    (points, vectors, the scale list) kept on one line.
    """
    if scale is None:
        scale = (1,) * encoding.dimension
    if len(scale) != encoding.dimension:
        raise ValueError("scale length must equal the encoding dimension")
    obj = _encoding_to_obj(encoding, scale)
    text = json.dumps(obj, indent=2, sort_keys=True)
    text = _INT_ARRAY.sub(lambda m: "[" + re.sub(r",\s+", ", ", m.group(1)) + "]", text)
    return text + "\n"


def _require(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise ParseError(f"{path}: {message}")


def _int_rows(obj, dimension: int, path: str) -> list[tuple[int, ...]]:
    _require(isinstance(obj, list), path, "expected a list")
    rows = []
    for i, row in enumerate(obj):
        row_path = f"{path}[{i}]"
        _require(
            isinstance(row, list)
            and all(isinstance(c, int) and not isinstance(c, bool) for c in row),
            row_path,
            "expected a list of integers",
        )
        _require(
            len(row) == dimension,
            row_path,
            f"expected {dimension} coordinates, got {len(row)}",
        )
        rows.append(tuple(row))
    return rows


def _obj_to_encoding(obj, dimension: int | None, path: str) -> Encoding:
    _require(isinstance(obj, dict), path, "expected an object")
    _require("dimension" in obj, path, "missing 'dimension'")
    dim = obj["dimension"]
    _require(
        isinstance(dim, int) and not isinstance(dim, bool) and dim >= 1,
        f"{path}.dimension",
        "expected a positive integer",
    )
    if dimension is not None:
        _require(dim == dimension, f"{path}.dimension", f"dimension mismatch: {dim} != {dimension}")
    tecs_obj = obj.get("tecs")
    _require(isinstance(tecs_obj, list) and tecs_obj, f"{path}.tecs", "expected a non-empty list")
    tecs = []
    for i, tec_obj in enumerate(tecs_obj):
        tec_path = f"{path}.tecs[{i}]"
        _require(isinstance(tec_obj, dict), tec_path, "expected an object")
        pattern_obj = tec_obj.get("pattern")
        _require(isinstance(pattern_obj, dict), f"{tec_path}.pattern", "expected an object")
        has_points = "points" in pattern_obj
        has_encoding = "encoding" in pattern_obj
        _require(
            has_points != has_encoding,
            f"{tec_path}.pattern",
            "expected exactly one of 'points' or 'encoding'",
        )
        if has_points:
            rows = _int_rows(pattern_obj["points"], dim, f"{tec_path}.pattern.points")
            _require(bool(rows), f"{tec_path}.pattern.points", "pattern must be non-empty")
            pattern = PointSet(rows)
        else:
            pattern = _obj_to_encoding(pattern_obj["encoding"], dim, f"{tec_path}.pattern.encoding")
        translators = _int_rows(tec_obj.get("translators", []), dim, f"{tec_path}.translators")
        tecs.append(Tec(pattern, (zero_vector(dim), *translators)))
    return Encoding(tuple(tecs))


def parse_encoding(text: str) -> tuple[Encoding, tuple[int, ...]]:
    """Parse an encoding document; returns the encoding and its scale
    (defaulting to 1 per dimension). The implicit zero translator is
    reinserted into every TEC."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    encoding = _obj_to_encoding(obj, None, "$")
    dim = encoding.dimension
    scale_obj = obj.get("scale", [1] * dim)
    _require(
        isinstance(scale_obj, list)
        and len(scale_obj) == dim
        and all(isinstance(s, int) and not isinstance(s, bool) and s >= 1 for s in scale_obj),
        "$.scale",
        f"expected a list of {dim} positive integers",
    )
    return encoding, tuple(scale_obj)
