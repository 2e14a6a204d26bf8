"""Recursive application of a TEC cover algorithm to TEC patterns.

After covering a dataset, each TEC's pattern is itself covered; whenever
that inner encoding is non-trivial (more than one TEC, or a pattern with
more than one occurrence) it replaces the atomic pattern, yielding a
nested encoding. Decoding always reproduces the original dataset.
"""

from __future__ import annotations

from dataclasses import replace

from .cover import CoverAlgorithm, Encoding, encoding_size, run_cover
from .geometry import PointSet
from .rrt import rrt


def is_trivial_encoding(encoding: Encoding) -> bool:
    """True iff the encoding is a single TEC whose pattern occurs once."""
    return len(encoding) == 1 and len(encoding.tecs[0].translators) == 1


def recursia(
    algorithm: CoverAlgorithm,
    dataset: PointSet,
    *,
    apply_rrt: bool = False,
    only_if_smaller: bool = False,
) -> Encoding:
    """Cover `dataset`, then recursively encode each TEC's pattern.

    A pattern is replaced by its own encoding only when that encoding is
    non-trivial; with `only_if_smaller` the replacement must also be
    strictly smaller than the atomic pattern. With `apply_rrt`, redundant
    translators are removed from every TEC at each level before its
    pattern is recursed into. Patterns at least as large as the dataset
    are never recursed into, which bounds the recursion depth.
    """
    encoding = run_cover(algorithm, dataset)
    if is_trivial_encoding(encoding):
        return encoding
    if apply_rrt:
        encoding = Encoding(tuple(rrt(t) for t in encoding))
    out = []
    for tec in encoding:
        pattern = tec.pattern
        assert isinstance(pattern, PointSet)  # cover output is always atomic
        if len(pattern) >= len(dataset):
            out.append(tec)
            continue
        nested = recursia(
            algorithm, pattern, apply_rrt=apply_rrt, only_if_smaller=only_if_smaller
        )
        if is_trivial_encoding(nested):
            out.append(tec)
            continue
        if only_if_smaller and encoding_size(nested) >= len(pattern):
            out.append(tec)
            continue
        out.append(replace(tec, pattern=nested))
    return Encoding(tuple(out))
