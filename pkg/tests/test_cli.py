import json
import subprocess
import sys

import pytest

from strategies import example_tree, k4_example
from wpi import cover_to_component
from wpi.cli import main
from wpi.io import graph_to_json, graph_to_text


@pytest.fixture
def tree_file(tmp_path):
    p = tmp_path / "tree.json"
    p.write_text(json.dumps(graph_to_json(example_tree())))
    return str(p)


@pytest.fixture
def k4_file(tmp_path):
    p = tmp_path / "k4.json"
    p.write_text(json.dumps(graph_to_json(k4_example())))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gens(capsys, tree_file):
    code, out, _ = run(capsys, "gens", "--graph", tree_file, "--r", "3", "--f", "max")
    assert code == 0
    assert sorted(out.split()) == sorted(["X1^2*X2^2*X3^3*X6^3", "X1^2*X2^2*X3^2*X4^2",
                                          "X2*X3^2*X4^2*X5^2", "X3^3*X4^2*X5^2*X6^3"])


def test_decompose_json(capsys, tree_file):
    code, out, _ = run(capsys, "decompose", "--graph", tree_file, "--r", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["irredundant"] is True
    assert len(data["components"]) == 9
    assert ["X3^2"] in data["components"]


def test_paths_and_dim(capsys, tree_file):
    assert run(capsys, "paths", "--graph", tree_file, "--r", "3")[1].split() == [
        "1-2-3-4", "1-2-3-6", "2-3-4-5", "5-4-3-6"]
    assert run(capsys, "dim", "--graph", tree_file, "--r", "3")[1].strip() == "5"
    assert run(capsys, "unmixed", "--graph", tree_file, "--r", "3")[1].strip() == "false"


def test_cm_clique(capsys, k4_file):
    code, out, _ = run(capsys, "cm", "--graph", k4_file, "--r", "2")
    assert code == 0
    assert out.splitlines()[0] == "not Cohen-Macaulay; witness triple (1,2,3)"


def test_cm_oracle(capsys, k4_file):
    code, out, _ = run(capsys, "cm", "--graph", k4_file, "--r", "2", "--oracle", "--format", "json")
    assert code == 0 and json.loads(out)["cohen_macaulay"] is False


def test_cm_needs_max_without_oracle(capsys, k4_file):
    code, _, err = run(capsys, "cm", "--graph", k4_file, "--r", "2", "--f", "min")
    assert code == 1 and "oracle" in err


def test_cm_unsupported_shape(capsys, k4_file):
    code, _, err = run(capsys, "cm", "--graph", k4_file, "--r", "3")
    assert code == 1 and "no characterization available" in err


def test_colon(capsys, tree_file):
    code, out, _ = run(capsys, "colon", "--graph", tree_file, "--r", "3", "--by", "X3^3")
    assert code == 0
    assert sorted(out.split()) == sorted(["X1^2*X2^2*X6^3", "X1^2*X2^2*X4^2",
                                          "X2*X4^2*X5^2", "X4^2*X5^2*X6^3"])


def test_colon_bad_monomial(capsys, tree_file):
    assert run(capsys, "colon", "--graph", tree_file, "--r", "3", "--by", "X9")[0] == 1


def test_polarize(capsys, tree_file):
    code, out, _ = run(capsys, "polarize", "--graph", tree_file, "--r", "1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["generators"]) == 5
    assert "X3_3" in data["variables"]


def test_text_format_input(capsys, tmp_path):
    p = tmp_path / "tree.txt"
    p.write_text("# example tree\n" + graph_to_text(example_tree()))
    code, out, _ = run(capsys, "covers", "--graph", str(p), "--r", "3")
    assert code == 0 and out.splitlines()[0] == "{v3^2}"
    assert len(out.splitlines()) == 9


def test_unreadable_graph(capsys, tmp_path):
    assert run(capsys, "gens", "--graph", str(tmp_path / "missing.json"), "--r", "1")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "edges": [[1, 1, 1]]}')
    assert run(capsys, "gens", "--graph", str(bad), "--r", "1")[0] == 2


def test_parse_errors(tree_file):
    with pytest.raises(SystemExit) as exc:
        main(["gens", "--graph", tree_file, "--r", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["gens", "--graph", tree_file, "--r", "1", "--f", "sum"])
    assert exc.value.code == 2


def test_byte_identical_runs(tree_file):
    cmd = [sys.executable, "-m", "wpi.cli", "decompose", "--graph", tree_file, "--r", "3", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_decompose_covers_bijection(capsys, tree_file, k4_file):
    for path, r in ((tree_file, 3), (k4_file, 2)):
        comps = json.loads(run(capsys, "decompose", "--graph", path, "--r", str(r), "--format", "json")[1])
        covers = json.loads(run(capsys, "covers", "--graph", path, "--r", str(r), "--format", "json")[1])
        as_text = sorted(sorted(cover_to_component({int(v): s for v, s in c.items()}).to_text())
                         for c in covers["covers"])
        assert as_text == sorted(sorted(c) for c in comps["components"])
