import json

import pydot
import pytest

from bicomm.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_hwv_one_row(capsys):
    code, out, _ = run(capsys, "hwv", "--partition", "3")
    assert code == 0
    assert out.split() == ["y1*z1^2", "y1^2*z1"]


def test_hwv_square_shape(capsys):
    code, out, _ = run(capsys, "hwv", "--partition", "2,2")
    assert code == 0 and len(out.strip().splitlines()) == 1


def test_hwv_three_rows(capsys):
    code, _, err = run(capsys, "hwv", "--partition", "2,1,1")
    assert code == 2 and "unsupported shape" in err


def test_hwv_json(capsys):
    code, out, _ = run(capsys, "hwv", "--partition", "2,1", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 2


def _rows(out, n):
    rows = {}
    for line in out.splitlines()[1:]:
        deg, lam, m = line.split("\t")[:3]
        if int(deg) == n and int(m):
            rows[lam] = int(m)
    return rows


def test_cocharacter_u_sumzero(capsys):
    code, out, _ = run(capsys, "cocharacter", "--variety", "u", "--alpha", "1,-1", "--max-degree", "4", "--expected")
    assert code == 0
    assert _rows(out, 4) == {"(4)": 1, "(2,2)": 1}
    assert "MISMATCH" not in out


def test_cocharacter_v_beta2zero(capsys):
    code, out, _ = run(capsys, "cocharacter", "--variety", "v", "--beta", "1,0", "--max-degree", "5")
    assert code == 0 and _rows(out, 5) == {"(5)": 2, "(4,1)": 1}


def test_cocharacter_free_json(capsys):
    code, out, _ = run(capsys, "cocharacter", "--variety", "b", "--max-degree", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data[2] == {"n": 3, "rows": [{"lambda": [3, 0], "m": 2}, {"lambda": [2, 1], "m": 2}]}


def test_cocharacter_usage_errors(capsys):
    assert run(capsys, "cocharacter", "--variety", "u", "--alpha", "0,0", "--max-degree", "3")[0] == 2
    assert run(capsys, "cocharacter", "--variety", "u", "--max-degree", "3")[0] == 2
    assert run(capsys, "cocharacter", "--variety", "v", "--alpha", "1,1", "--max-degree", "3")[0] == 2
    assert run(capsys, "cocharacter", "--variety", "u", "--alpha", "1,x", "--max-degree", "3")[0] == 2


def test_degree_cap(capsys, monkeypatch):
    monkeypatch.setenv("BICOMM_MAX_DEGREE_CAP", "4")
    code, _, err = run(capsys, "cocharacter", "--variety", "b", "--max-degree", "5")
    assert code == 2 and "cap" in err


@pytest.fixture
def files(tmp_path):
    paths = {}
    paths["yz"] = tmp_path / "yz.json"
    paths["yz"].write_text('[{"d": 1, "linear": ["0"], "square": [{"coeff": "1", "y": [1], "z": [1]}]}]')
    paths["empty"] = tmp_path / "empty.json"
    paths["empty"].write_text("[]")
    paths["bad"] = tmp_path / "bad.json"
    paths["bad"].write_text('[\n {"d": 2,\n  "linear": [}\n]')
    paths["inv"] = tmp_path / "inv.json"
    paths["inv"].write_text('[{"d": 1, "linear": ["0"], "square": [{"coeff": "1", "y": [2], "z": [0]}]}]')
    return {k: str(v) for k, v in paths.items()}


def test_multiplicity_files(capsys, files):
    assert run(capsys, "multiplicity", files["yz"], "--partition", "3")[1].strip() == "0"
    assert run(capsys, "multiplicity", files["empty"], "--partition", "4,2")[1].strip() == "3"
    assert run(capsys, "multiplicity", files["empty"], "--partition", "1")[1].strip() == "1"


def test_multiplicity_bad_inputs(capsys, files):
    code, _, err = run(capsys, "multiplicity", files["bad"], "--partition", "3")
    assert code == 2 and "line 3, column 14" in err
    code, _, err = run(capsys, "multiplicity", files["inv"], "--partition", "3")
    assert code == 3
    assert run(capsys, "multiplicity", files["empty"] + ".missing", "--partition", "3")[0] == 2


def test_consequences(capsys, files):
    code, out, _ = run(capsys, "consequences", "--generators", files["yz"], "--partition", "2,1")
    assert code == 0 and out.startswith("# dim 4")


def test_lattice_check_figure(capsys):
    code, _, err = run(capsys, "lattice", "--variety", "u", "--alpha", "1,1", "--max-degree", "5", "--check-figure", "u-case5")
    assert code == 0 and "match" in err


def test_lattice_check_figure_wrong_case(capsys):
    args = ["lattice", "--variety", "u", "--alpha", "1,2", "--max-degree", "4", "--check-figure"]
    assert run(capsys, *args, "u-case5")[0] == 2
    assert run(capsys, *args, "u-case9")[0] == 2


def test_lattice_dot_with_ellipses(capsys):
    code, out, _ = run(capsys, "lattice", "--variety", "v", "--beta", "1,-1", "--max-degree", "6", "--format", "dot")
    assert code == 0
    assert out.count('label="..."') == 5
    assert pydot.graph_from_dot_data(out)


def test_lattice_free_algebra(capsys):
    code, out, _ = run(capsys, "lattice", "--variety", "b", "--max-degree", "3")
    lines = out.strip().splitlines()
    assert code == 0
    assert sum(1 for l in lines if l.startswith("3\t")) == 6
    assert all("(none)" not in l for l in lines if not l.startswith("3\t"))


def test_lattice_json_is_deterministic(capsys):
    args = ["lattice", "--variety", "v", "--beta", "1,2", "--max-degree", "5", "--format", "json", "--seed", "5"]
    first = run(capsys, *args)[1]
    assert first == run(capsys, *args)[1]
    data = json.loads(first)
    assert set(data) >= {"vertices", "edges"}
    assert set(data["vertices"][0]) == {"name", "degree", "lambda", "coords"}


def test_verify_scope(capsys):
    code, out, _ = run(capsys, "verify", "--scope", "u-degree4")
    assert code == 0
    assert out.count("PASS") == 5
    assert run(capsys, "verify", "--scope", "nope")[0] == 2


def test_output_file(capsys, tmp_path):
    target = tmp_path / "g.dot"
    code, out, _ = run(capsys, "lattice", "--variety", "u", "--alpha", "1,2", "--max-degree", "3", "--format", "dot", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("digraph {")
