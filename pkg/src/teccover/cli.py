"""Command-line interface: discover, encode, decode, verify, compare."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import codec, harness
from .cover import (
    CoverAlgorithm,
    covered_set,
    tec_compression_factor,
    tec_quality_key,
)
from .discovery import compute_tecs

_ALGORITHM_CHOICES = {a.value: a for a in CoverAlgorithm}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="teccover",
        description="Translatable point-set pattern discovery and lossless "
        "compressive encoding.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p: argparse.ArgumentParser, input_help: str) -> None:
        p.add_argument("--input", type=Path, default=None, help=input_help + " (default: stdin)")
        p.add_argument("--output", type=Path, default=None, help="output file (default: stdout)")

    p = sub.add_parser("discover", help="list the TECs of a dataset with their compression factors")
    add_io(p, "dataset file")

    p = sub.add_parser("encode", help="encode a dataset as a TEC cover document")
    p.add_argument("--algorithm", choices=sorted(_ALGORITHM_CHOICES), required=True)
    p.add_argument("--recursia", action="store_true", help="recursively encode TEC patterns")
    p.add_argument("--rrt", action="store_true", help="remove redundant translators")
    p.add_argument(
        "--only-if-smaller",
        action="store_true",
        help="replace a pattern with its nested encoding only when strictly smaller",
    )
    add_io(p, "dataset file")

    p = sub.add_parser("decode", help="decode an encoding document back to a dataset file")
    add_io(p, "encoding document")

    p = sub.add_parser("verify", help="decode a document and diff it against a reference dataset")
    p.add_argument("--input", type=Path, default=None, help="encoding document (default: stdin)")
    p.add_argument("--reference", type=Path, required=True, help="reference dataset file")

    p = sub.add_parser("compare", help="run the 2x2 variant grid over a corpus and emit CSV")
    p.add_argument("--algorithm", choices=sorted(_ALGORITHM_CHOICES), required=True)
    p.add_argument("--input", type=Path, required=True, help="corpus directory of dataset files")
    p.add_argument("--output", type=Path, default=None, help="CSV file (default: stdout)")
    p.add_argument(
        "--figures",
        type=Path,
        default=None,
        metavar="DIR",
        help="also render comparison figures into DIR",
    )
    return parser


def _read_text(path: Path | None) -> str:
    if path is None:
        return sys.stdin.read()
    return path.read_text(encoding="utf-8")


def _write_text(path: Path | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text, encoding="utf-8")


def _format_point(p: tuple) -> str:
    return ",".join(str(c) for c in p)


def _cmd_discover(args) -> int:
    dataset = codec.parse_dataset(_read_text(args.input))
    tecs = sorted(compute_tecs(dataset.points), key=tec_quality_key)
    lines = [f"# dataset: {len(dataset.points)} points, dimension {dataset.points.dimension}"]
    for i, tec in enumerate(tecs, start=1):
        covered = covered_set(tec)
        cf = tec_compression_factor(tec)
        lines.append(
            f"TEC {i}: cf={float(cf):.6g} pattern={len(tec.pattern)} "
            f"translators={len(tec.translators)} covered={len(covered)}"
        )
        lines.append("  pattern: " + " ".join(_format_point(p) for p in tec.pattern))
        lines.append("  translators: " + " ".join(_format_point(v) for v in tec.translators))
    _write_text(args.output, "\n".join(lines) + "\n")
    return 0


def _cmd_encode(args) -> int:
    dataset = codec.parse_dataset(_read_text(args.input))
    config = harness.RunConfig(
        _ALGORITHM_CHOICES[args.algorithm], args.recursia, args.rrt
    )
    encoding = harness.encode_dataset(
        config, dataset.points, only_if_smaller=args.only_if_smaller
    )
    if codec.decode_encoding(encoding) != dataset.points:
        raise AssertionError("encoding failed to decode back to its input")
    _write_text(args.output, codec.serialize_encoding(encoding, dataset.scale))
    return 0


def _cmd_decode(args) -> int:
    encoding, scale = codec.parse_encoding(_read_text(args.input))
    points = codec.decode_encoding(encoding)
    _write_text(args.output, codec.format_dataset(points, scale))
    return 0


def _cmd_verify(args) -> int:
    encoding, scale = codec.parse_encoding(_read_text(args.input))
    decoded = codec.dataset_in_original_units(codec.decode_encoding(encoding), scale)
    reference_ds = codec.parse_dataset(args.reference.read_text(encoding="utf-8"))
    reference = codec.dataset_in_original_units(reference_ds.points, reference_ds.scale)
    if decoded == reference:
        print(f"OK: decoded output matches reference ({len(reference)} points)")
        return 0
    only_decoded = sorted(decoded - reference)
    only_reference = sorted(reference - decoded)
    if only_decoded and (not only_reference or only_decoded[0] <= only_reference[0]):
        first, where = only_decoded[0], "decoded output only"
    else:
        first, where = only_reference[0], "reference only"
    rendered = " ".join(codec.format_fraction(c) for c in first)
    print(f"MISMATCH: first differing point: {rendered} ({where})", file=sys.stderr)
    return 2


def _cmd_compare(args) -> int:
    rows = harness.run_corpus(args.input, [_ALGORITHM_CHOICES[args.algorithm]])
    import io

    buf = io.StringIO()
    harness.write_csv(rows, buf)
    _write_text(args.output, buf.getvalue())
    print(harness.format_summary(harness.aggregate(rows)), end="", file=sys.stderr)
    if args.figures is not None:
        from . import figures

        for path in figures.save_report_figures(rows, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    return 0


_COMMANDS = {
    "discover": _cmd_discover,
    "encode": _cmd_encode,
    "decode": _cmd_decode,
    "verify": _cmd_verify,
    "compare": _cmd_compare,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (codec.ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
