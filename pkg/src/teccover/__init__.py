"""Translatable point-set pattern discovery and lossless compressive encoding."""

from .codec import (
    Dataset,
    ParseError,
    format_dataset,
    parse_dataset,
    parse_encoding,
    serialize_encoding,
)
from .cover import (
    CoverAlgorithm,
    Encoding,
    cover_cosiatec,
    cover_siatec_compress,
    covered_set,
    decode_encoding,
    encoding_compression_factor,
    encoding_size,
    run_cover,
    tec_compression_factor,
    tec_quality_key,
)
from .discovery import MtpEntry, Tec, compute_mtps, compute_tecs
from .geometry import DimensionError, Point, PointSet, Vector
from .harness import ResultRow, RunConfig, aggregate, run_corpus, run_pipeline
from .recursia import is_trivial_encoding, recursia
from .rrt import rrt

__version__ = "0.1.0"

__all__ = [
    "CoverAlgorithm",
    "Dataset",
    "DimensionError",
    "Encoding",
    "MtpEntry",
    "ParseError",
    "Point",
    "PointSet",
    "ResultRow",
    "RunConfig",
    "Tec",
    "Vector",
    "aggregate",
    "compute_mtps",
    "compute_tecs",
    "cover_cosiatec",
    "cover_siatec_compress",
    "covered_set",
    "decode_encoding",
    "encoding_compression_factor",
    "encoding_size",
    "format_dataset",
    "is_trivial_encoding",
    "parse_dataset",
    "parse_encoding",
    "recursia",
    "rrt",
    "run_corpus",
    "run_cover",
    "run_pipeline",
    "serialize_encoding",
    "tec_compression_factor",
    "tec_quality_key",
    "__version__",
]
