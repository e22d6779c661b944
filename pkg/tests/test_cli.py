import json

import numpy as np
import pytest

from betadepth.cli import main
from betadepth.pointio import read_points_csv, write_points_csv


@pytest.fixture
def square_files(tmp_path):
    data = tmp_path / "data.csv"
    data.write_text("x,y\n1,0\n0,1\n-1,0\n0,-1\n")
    query = tmp_path / "query.csv"
    query.write_text("0,0\n5,5\n")
    return str(data), str(query)


def test_read_points_csv_with_header(tmp_path):
    p = tmp_path / "pts.csv"
    p.write_text("x,y\n1.5,2.5\n-3,4\n")
    pts = read_points_csv(str(p))
    assert pts.tolist() == [[1.5, 2.5], [-3.0, 4.0]]


def test_read_points_csv_errors_name_the_row(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("1,2\n3,oops\n")
    with pytest.raises(ValueError, match="row 2"):
        read_points_csv(str(p))
    p2 = tmp_path / "ragged.csv"
    p2.write_text("1,2\n3,4,5\n")
    with pytest.raises(ValueError, match="row 2"):
        read_points_csv(str(p2))
    p3 = tmp_path / "empty.csv"
    p3.write_text("x,y\n")
    with pytest.raises(ValueError, match="no data"):
        read_points_csv(str(p3))


def test_write_then_read_round_trip(tmp_path):
    pts = np.array([[0.1, -2.25], [1e-3, 7.0]])
    path = tmp_path / "out.csv"
    write_points_csv(pts, str(path))
    assert (read_points_csv(str(path)) == pts).all()


def test_compute_csv_output(square_files, capsys):
    data, query = square_files
    assert main(["compute", "--data", data, "--query", query, "--beta", "1"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[0] == "query_index,raw_count,normalized"
    assert out[1] == "0,6,1.0"
    assert out[2] == "1,0,0.0"


def test_compute_json_engines_agree(square_files, capsys):
    data, query = square_files
    results = {}
    for engine in ("auto", "brute", "fast"):
        assert main(["compute", "--data", data, "--query", query,
                     "--beta", "2", "--engine", engine, "--format", "json"]) == 0
        obj = json.loads(capsys.readouterr().out)
        results[engine] = [r["raw_count"] for r in obj["results"]]
        assert obj["n"] == 4
        assert obj["beta"] == 2.0
    assert results["auto"] == results["brute"] == results["fast"] == [6, 0]


def test_compute_auto_uses_reference_for_high_dimension(tmp_path, capsys):
    rng = np.random.default_rng(61)
    data = tmp_path / "d5.csv"
    write_points_csv(rng.uniform(-5, 5, (20, 5)), str(data))
    query = tmp_path / "q5.csv"
    write_points_csv(rng.uniform(-5, 5, (2, 5)), str(query))
    assert main(["compute", "--data", str(data), "--query", str(query),
                 "--beta", "2", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["method"] == "brute"


def test_compute_fast_rejects_high_dimension(tmp_path, capsys):
    data = tmp_path / "d3.csv"
    data.write_text("1,2,3\n4,5,6\n")
    query = tmp_path / "q3.csv"
    query.write_text("0,0,0\n")
    assert main(["compute", "--data", str(data), "--query", str(query),
                 "--engine", "fast"]) == 2
    assert "2-dimensional" in capsys.readouterr().err


def test_compute_malformed_file_exits_nonzero(tmp_path, capsys, square_files):
    _, query = square_files
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2\nx,y,z\n")
    assert main(["compute", "--data", str(bad), "--query", query]) == 2
    err = capsys.readouterr().err
    assert "error:" in err and "row 2" in err


def test_compute_dimension_mismatch(tmp_path, capsys, square_files):
    data, _ = square_files
    q3 = tmp_path / "q3.csv"
    q3.write_text("0,0,0\n")
    assert main(["compute", "--data", data, "--query", str(q3)]) == 2
    assert "dimension" in capsys.readouterr().err


def test_experiment_csv_deterministic(capsys):
    args = ["experiment", "--n-data", "15", "--n-query", "3", "--seed", "7"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    assert first.startswith("query_index,sd,sphd,ld")


def test_experiment_json(capsys):
    assert main(["experiment", "--n-data", "12", "--n-query", "2",
                 "--seed", "3", "--format", "json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["summary"]["min_ld_over_sphd"] == "inf" or \
        obj["summary"]["min_ld_over_sphd"] >= 1.0


def test_gadget_subcommands(tmp_path, capsys):
    assert main(["gadget", "--kind", "spherical", "--values", "1,2,3"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["unique"] is True and obj["raw_count"] == 42

    assert main(["gadget", "--kind", "lens", "--values", "1,2,2"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["unique"] is False and obj["duplicate_pairs"] == 1

    pts_file = tmp_path / "gadget.csv"
    assert main(["gadget", "--kind", "beta", "--beta", "3", "--values", "4,5",
                 "--emit-points", str(pts_file)]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["unique"] is True and obj["raw_count"] == 2
    assert read_points_csv(str(pts_file)).shape == (4, 2)


def test_gadget_beta_requires_beta(capsys):
    assert main(["gadget", "--kind", "beta", "--values", "1,2"]) == 2
    assert "beta" in capsys.readouterr().err


def test_gadget_bad_values(capsys):
    assert main(["gadget", "--kind", "lens", "--values", "1,zzz"]) == 2
    capsys.readouterr()


def test_bench_smoke(capsys):
    assert main(["bench", "--max-n", "200", "--repeats", "1"]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert out[0] == "n,engine,beta,median_seconds,raw_count"
    assert len(out) > 1
