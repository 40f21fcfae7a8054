import json

import numpy as np
import pytest

from npotent.cli import main, parse_coefficients
from npotent.examples import gen_diag_full, gen_random_npotent
from npotent.matrixfile import read_matrix, write_matrix
from npotent.potency import certify


@pytest.fixture
def five_file(tmp_path, five):
    path = tmp_path / "five.json"
    write_matrix(path, five.matrix)
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_text(capsys, five_file):
    code, out, _ = run(capsys, "analyze", five_file, "--enumerate")
    assert code == 0
    assert "order n              5" in out
    assert "projections in comb(T): 16" in out
    assert "(-0.25-0.25i, 0, -0.25+0.25i, 0.5)" in out


def test_analyze_structured_to_file(capsys, five_file, tmp_path):
    dest = tmp_path / "report.json"
    code, out, _ = run(capsys, "analyze", five_file, "--format", "structured", "-o", str(dest))
    assert code == 0 and out == ""
    data = json.loads(dest.read_text())
    assert data["order"] == 5
    assert [e["exponent"] for e in data["eigenvalues"]] == ["zero", 0, 1, 2, 3]


def test_enumerate(capsys, five_file):
    code, out, _ = run(capsys, "enumerate", five_file, "--format", "structured")
    data = json.loads(out)
    assert code == 0 and len(data["projections"]) == 16
    row = next(p for p in data["projections"] if p["exponents"] == [1, 2])
    assert np.allclose([complex(*c) for c in row["coefficients"]], [-0.25 - 0.25j, 0, -0.25 + 0.25j, 0.5])


def test_contour_check(capsys, five_file):
    code, out, _ = run(capsys, "contour-check", five_file, "--format", "structured")
    data = json.loads(out)
    assert code == 0 and data["nodes"] == 256
    for e in data["eigenvalues"]:
        assert e["expansion"] <= 1e-8 and e["direct"] <= 1e-8
        assert [c["m"] for c in e["convergence"]] == [16, 32, 64, 128]
    code, out, _ = run(capsys, "contour-check", five_file, "--nodes", "64")
    assert code == 0 and "convergence" in out


def test_contour_check_bad_radius(capsys, five_file):
    code, _, err = run(capsys, "contour-check", five_file, "--radius", "0.9")
    assert code == 1 and "contour error" in err


def test_classify(capsys, five_file):
    code, out, _ = run(capsys, "classify", five_file, "--coeffs=-0.25-0.25i,0,-0.25+0.25i,0.5")
    assert code == 0 and "S = {i, -1}" in out
    code, out, _ = run(capsys, "classify", five_file, "--coeffs=0,0,0,0")
    assert "S = ∅" in out
    code, out, _ = run(capsys, "classify", five_file, "--coeffs=0.5,0,0,0")
    assert "NotAProjection" in out
    code, out, _ = run(capsys, "classify", five_file, "--coeffs=0,0,0,1", "--format", "structured")
    assert json.loads(out)["subset"]["exponents"] == [0, 1, 2, 3]


def test_classify_wrong_length(capsys, five_file):
    code, _, err = run(capsys, "classify", five_file, "--coeffs=1,2")
    assert code == 1 and "expected 4 coefficients" in err


def test_parse_coefficients():
    assert parse_coefficients("-0.25-0.25i, 0, i, -j, 2j") == [-0.25 - 0.25j, 0, 1j, -1j, 2j]
    with pytest.raises(ValueError):
        parse_coefficients("1,x")


def test_not_npotent_exit_code(capsys, tmp_path):
    path = tmp_path / "jordan.json"
    write_matrix(path, [[0, 1], [0, 0]])
    code, _, err = run(capsys, "analyze", str(path))
    assert code == 2 and "not n-potent" in err
    code, _, _ = run(capsys, "analyze", str(gen_file(tmp_path, gen_diag_full(5))), "--order", "4")
    assert code == 2


def gen_file(tmp_path, matrix, name="m.json"):
    path = tmp_path / name
    write_matrix(path, matrix)
    return path


def test_io_and_parse_failures(capsys, tmp_path):
    code, _, err = run(capsys, "analyze", str(tmp_path / "missing.json"))
    assert code == 1
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "entries": [[1, 0]]}')
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 1 and "entries" in err


def test_generate_tripotent(capsys, tmp_path):
    dest = tmp_path / "t.json"
    code, out, _ = run(capsys, "generate", "tripotent", "--p", "3", "-o", str(dest))
    assert code == 0 and "certified 3-potent" in out
    assert np.array_equal(read_matrix(dest), [[1, -6], [0, -1]])


def test_generate_reflection_certifies_documented_order(capsys, tmp_path):
    dest = tmp_path / "r.json"
    code, out, _ = run(capsys, "generate", "reflection", "--k", "3", "--m", "64", "-o", str(dest))
    assert code == 0
    assert "certified 7-potent" in out and "smallest order 4" in out
    assert read_matrix(dest).shape == (64, 64)
    code, out, _ = run(capsys, "analyze", str(dest), "--order", "7")
    assert code == 0 and "order n              7" in out


def test_generate_random_to_stdout(capsys):
    code, out, err = run(capsys, "generate", "random", "--n", "5", "--ranks", "0:2,1:1,2:2,3:1,4:2", "--seed", "3")
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 8
    assert "certified 5-potent" in err
    m = np.array([complex(*e) for e in data["entries"]]).reshape(8, 8)
    assert np.array_equal(m, gen_random_npotent(5, {0: 2, 1: 1, 1j: 2, -1: 1, -1j: 2}, seed=3))
    assert certify(m).order == 5


def test_generate_random_needs_ranks(capsys):
    code, _, err = run(capsys, "generate", "random")
    assert code == 1 and "--ranks" in err


def test_seed_env_and_flag(capsys, monkeypatch):
    args = ["generate", "random", "--n", "3", "--ranks", "1:2,2:2"]
    monkeypatch.setenv("NPOTENT_SEED", "11")
    _, from_env, _ = run(capsys, *args)
    _, from_flag, _ = run(capsys, *args, "--seed", "11")
    _, other, _ = run(capsys, *args, "--seed", "12")
    assert from_env == from_flag != other
    monkeypatch.delenv("NPOTENT_SEED")
    _, default, _ = run(capsys, *args)
    _, zero, _ = run(capsys, *args, "--seed", "0")
    assert default == zero


def test_generate_diag_and_nonhermitian(capsys):
    code, out, _ = run(capsys, "generate", "diag", "--n", "4")
    assert code == 0 and json.loads(out)["dim"] == 4
    code, out, _ = run(capsys, "generate", "nonhermitian")
    assert json.loads(out)["entries"] == [[1, 0], [1, 0], [0, 0], [0, 0]]
