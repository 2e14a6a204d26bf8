import json
import random

import pytest

from teccover.cli import main
from teccover.codec import format_dataset, parse_dataset
from teccover.geometry import PointSet

from generators import hierarchical_dataset
from test_harness import write_corpus


@pytest.fixture
def diag_file(tmp_path, seven_diagonal):
    path = tmp_path / "diag.pts"
    path.write_text(format_dataset(seven_diagonal), encoding="utf-8")
    return path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_discover_lists_tecs(diag_file, capsys):
    code, out, _ = run(capsys, "discover", "--input", str(diag_file))
    assert code == 0
    assert "TEC 1:" in out and "cf=" in out
    assert out.count("pattern:") == 6


def test_encode_decode_verify_round_trip(tmp_path, diag_file, capsys):
    doc = tmp_path / "diag.tecs.json"
    code, _, _ = run(
        capsys,
        "encode", "--algorithm", "cosiatec", "--input", str(diag_file),
        "--output", str(doc),
    )
    assert code == 0
    decoded = tmp_path / "decoded.pts"
    code, _, _ = run(capsys, "decode", "--input", str(doc), "--output", str(decoded))
    assert code == 0
    assert parse_dataset(decoded.read_text()).points == parse_dataset(diag_file.read_text()).points

    code, out, _ = run(
        capsys, "verify", "--input", str(doc), "--reference", str(diag_file)
    )
    assert code == 0
    assert "OK" in out


def test_encode_rrt_writes_trimmed_translators(tmp_path, capsys):
    # A 7-point run next to a 9-point run along the same step: the winning
    # TEC places the short run at three overlapping offsets inside the long
    # one, and RRT drops the middle offset.
    points = PointSet(
        [(i, i) for i in range(7)] + [(50 + i, i) for i in range(9)]
    )
    src = tmp_path / "piece.pts"
    src.write_text(format_dataset(points), encoding="utf-8")
    plain = tmp_path / "plain.json"
    trimmed = tmp_path / "trimmed.json"
    assert run(capsys, "encode", "--algorithm", "cosiatec", "--input", str(src),
               "--output", str(plain))[0] == 0
    assert run(capsys, "encode", "--algorithm", "cosiatec", "--rrt", "--input", str(src),
               "--output", str(trimmed))[0] == 0
    n_plain = sum(len(t["translators"]) for t in json.loads(plain.read_text())["tecs"])
    n_trimmed = sum(len(t["translators"]) for t in json.loads(trimmed.read_text())["tecs"])
    assert n_plain == 3
    assert n_trimmed == 2
    assert run(capsys, "verify", "--input", str(trimmed), "--reference", str(src))[0] == 0


def test_encode_recursia_flag_round_trips(tmp_path, capsys):
    rng = random.Random(81)
    src = tmp_path / "piece.pts"
    src.write_text(format_dataset(hierarchical_dataset(rng)), encoding="utf-8")
    doc = tmp_path / "piece.json"
    code, _, _ = run(
        capsys,
        "encode", "--algorithm", "siateccompress", "--recursia", "--rrt",
        "--only-if-smaller", "--input", str(src), "--output", str(doc),
    )
    assert code == 0
    assert run(capsys, "verify", "--input", str(doc), "--reference", str(src))[0] == 0


def test_verify_mismatch_exits_2(tmp_path, diag_file, capsys):
    doc = tmp_path / "diag.json"
    run(capsys, "encode", "--algorithm", "cosiatec", "--input", str(diag_file),
        "--output", str(doc))
    # Corrupt the document: move a pattern point.
    obj = json.loads(doc.read_text())
    tec = obj["tecs"][0]
    if "points" in tec["pattern"]:
        tec["pattern"]["points"][0][0] += 100
    doc.write_text(json.dumps(obj))
    code, _, err = run(capsys, "verify", "--input", str(doc), "--reference", str(diag_file))
    assert code == 2
    assert "first differing point" in err


def test_unparseable_input_exits_1(tmp_path, capsys):
    bad = tmp_path / "bad.pts"
    bad.write_text("1 2\nnope\n", encoding="utf-8")
    code, _, err = run(capsys, "discover", "--input", str(bad))
    assert code == 1
    assert "error:" in err and "line 2" in err


def test_missing_file_exits_1(tmp_path, capsys):
    code, _, err = run(capsys, "encode", "--algorithm", "cosiatec",
                       "--input", str(tmp_path / "absent.pts"))
    assert code == 1
    assert "error:" in err


def test_unknown_flag_rejected(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["discover", "--bogus"])
    assert exc.value.code != 0


def test_encode_requires_algorithm(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["encode"])
    assert exc.value.code != 0


def test_stdin_stdout_pipeline(diag_file, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(diag_file.read_text()))
    code, out, _ = run(capsys, "encode", "--algorithm", "cosiatec")
    assert code == 0
    assert json.loads(out)["dimension"] == 2


def test_compare_writes_csv_and_figures(tmp_path, capsys):
    rng = random.Random(82)
    corpus = write_corpus(
        tmp_path,
        {"a.pts": hierarchical_dataset(rng), "b.pts": hierarchical_dataset(rng)},
    )
    out_csv = tmp_path / "rows.csv"
    figures = tmp_path / "figs"
    code, _, err = run(
        capsys,
        "compare", "--algorithm", "cosiatec", "--input", str(corpus),
        "--output", str(out_csv), "--figures", str(figures),
    )
    assert code == 0
    lines = out_csv.read_text().splitlines()
    assert lines[0] == "piece,algorithm,recursia,rrt,n_points,encoding_size,cf,ms"
    assert len(lines) == 1 + 2 * 4
    assert "mean_cf" in err
    assert (figures / "cf_by_piece_cosiatec.png").stat().st_size > 0
    assert (figures / "cf_variant_means.png").stat().st_size > 0


def test_compare_missing_corpus_exits_1(tmp_path, capsys):
    code, _, err = run(
        capsys, "compare", "--algorithm", "cosiatec",
        "--input", str(tmp_path / "nope"),
    )
    assert code == 1
    assert "error:" in err


def test_decode_renders_original_units(tmp_path, capsys):
    src = tmp_path / "piece.pts"
    src.write_text("0.5 60\n1.5 60\n10.5 60\n11.5 60\n", encoding="utf-8")
    doc = tmp_path / "piece.json"
    run(capsys, "encode", "--algorithm", "siateccompress", "--input", str(src),
        "--output", str(doc))
    code, out, _ = run(capsys, "decode", "--input", str(doc))
    assert code == 0
    assert "# scale: 10 1" in out
    assert "0.5 60" in out and "11.5 60" in out


def test_compare_csv_to_stdout(tmp_path, capsys):
    rng = random.Random(83)
    corpus = write_corpus(tmp_path, {"a.pts": hierarchical_dataset(rng)})
    code, out, err = run(
        capsys, "compare", "--algorithm", "siateccompress", "--input", str(corpus)
    )
    assert code == 0
    assert out.startswith("piece,algorithm")
    assert "overall" not in out  # summary goes to stderr
    assert "mean_cf" in err
