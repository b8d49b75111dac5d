import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plsrd.cli import main
from plsrd.exceptions import GraphFormatError
from plsrd.fixtures import random_connected_graph
from plsrd.io import (
    graph_from_edgelist,
    graph_from_json,
    graph_to_json,
    labeling_from_json,
    labeling_to_json,
    read_graph,
    write_graph,
    write_labeling,
)

from conftest import family


@settings(max_examples=60, deadline=None)
@given(n=st.integers(2, 30), seed=st.integers(0, 10**6))
def test_json_round_trip_is_byte_identical(n, seed):
    g = random_connected_graph(n, seed)
    text = graph_to_json(g)
    assert graph_to_json(graph_from_json(text)) == text
    assert graph_from_json(text) == g


def test_file_round_trip(tmp_path):
    g = family("flowersnark", 3)
    write_graph(g, tmp_path / "g.json")
    first = (tmp_path / "g.json").read_bytes()
    write_graph(read_graph(tmp_path / "g.json"), tmp_path / "h.json")
    assert (tmp_path / "h.json").read_bytes() == first


def test_edgelist_reader():
    g = graph_from_edgelist("# square\n4 4\n0 1\n1 2\n2 3\n3 0\n")
    assert g == family("cycle", 4)


@pytest.mark.parametrize(
    "text",
    ["", "3\n0 1", "3 2\n0 1", "2 1\n0 5", "2 1\n0 0", '{"n": 2}', "{not json"],
)
def test_bad_graph_files(text):
    with pytest.raises(GraphFormatError):
        (graph_from_json if text.startswith("{") else graph_from_edgelist)(text)


def test_labeling_round_trip():
    assert labeling_from_json(labeling_to_json([-1, 2, 1])) == (-1, 2, 1)
    with pytest.raises(ValueError):
        labeling_from_json('{"labels": [0, 1]}')


# ---------------------------------------------------------------- CLI


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_prism(tmp_path, capsys):
    code, _, _ = run(["generate", "--family", "prism", "--n", "5", "--out", str(tmp_path / "p5.json")], capsys)
    assert code == 0
    assert read_graph(tmp_path / "p5.json").n == 10


def test_generate_ladder_range_guard(capsys):
    code, _, err = run(["generate", "--family", "ladder", "--n", "1"], capsys)
    assert code == 2 and "n >= 2" in err


def test_generate_tree(capsys):
    code, out, _ = run(["generate", "--family", "tree", "--edges", "0-1,1-2,1-3"], capsys)
    assert code == 0
    assert json.loads(out) == {"n": 4, "edges": [[0, 1], [1, 2], [1, 3]]}


def test_generate_bad_tree(capsys):
    assert run(["generate", "--family", "tree", "--edges", "0-1,1-2,2-0"], capsys)[0] == 2


@pytest.fixture
def files(tmp_path):
    def make(name, g=None, labels=None):
        path = tmp_path / name
        if g is not None:
            write_graph(g, path)
        else:
            write_labeling(labels, path)
        return str(path)

    return make


def test_validate(files, capsys):
    p3 = files("p3.json", family("path", 3))
    code, out, _ = run(["validate", "--graph", p3, "--labeling", files("ok.json", labels=[-1, 2, 1])], capsys)
    assert code == 0 and json.loads(out) == []
    code, out, _ = run(["validate", "--graph", p3, "--labeling", files("bad.json", labels=[-1, -1, 2])], capsys)
    report = json.loads(out)
    assert code == 1
    kinds = {(v["kind"], tuple(v["vertices"])) for v in report}
    assert ("C1_NoGuard", (0,)) in kinds and ("C3_NonpositiveSum", (1,)) in kinds
    c4 = files("c4.json", family("cycle", 4))
    assert run(["validate", "--graph", c4, "--labeling", files("ones.json", labels=[1] * 4)], capsys)[0] == 0


def test_validate_length_mismatch(files, capsys):
    p3 = files("p3.json", family("path", 3))
    assert run(["validate", "--graph", p3, "--labeling", files("l.json", labels=[1, 1])], capsys)[0] == 2


def test_missing_file_is_io_error(tmp_path, capsys):
    code, _, _ = run(["validate", "--graph", str(tmp_path / "nope.json"), "--labeling", str(tmp_path / "x")], capsys)
    assert code == 3


@pytest.mark.parametrize(
    "g,algo,value",
    [(family("wheel", 4), "brute", 3), (family("prism", 4), "bnb", 6), (family("complete", 3), "brute", 2)],
)
def test_solve(files, capsys, g, algo, value):
    code, out, _ = run(["solve", "--graph", files("g.json", g), "--algo", algo], capsys)
    result = json.loads(out)
    assert code == 0 and result["optimum"] == value and result["proven"] is True


def test_solve_budget_exit_code(capsys):
    code, out, _ = run(["solve", "--family", "ladder", "--n", "8", "--node-budget", "5"], capsys)
    assert code == 4 and json.loads(out)["proven"] is False


def test_solve_brute_size_guard(files, capsys):
    assert run(["solve", "--graph", files("g.json", family("path", 20)), "--algo", "brute"], capsys)[0] == 5


def _rows(tmp_path, capsys, argv):
    code, out, _ = run(argv + ["--json", str(tmp_path / "rows.json")], capsys)
    return code, out, json.loads((tmp_path / "rows.json").read_text())


def test_verify_paths(tmp_path, capsys):
    code, _, rows = _rows(tmp_path, capsys, ["verify", "--family", "path", "--from", "3", "--to", "12"])
    assert code == 0 and len(rows) == 10
    assert all(r["status"] == "Match" for r in rows)


def test_verify_prisms(tmp_path, capsys):
    code, out, rows = _rows(tmp_path, capsys, ["verify", "--family", "prism", "--from", "3", "--to", "8"])
    assert code == 0 and all(r["status"] == "Match" for r in rows)
    by_n = {r["n"]: r for r in rows}
    assert by_n[4]["exact"] == 6 and by_n[5]["exact"] == 7
    assert "status" in out.splitlines()[0]


def test_verify_flower_snarks(tmp_path, capsys):
    argv = ["verify", "--family", "flowersnark", "--from", "2", "--to", "3", "--max-vertices", "0"]
    code, _, rows = _rows(tmp_path, capsys, argv)
    assert code == 0
    assert [(r["upper"], r["status"]) for r in rows] == [(13, "BoundConsistent"), (19, "BoundConsistent")]


def test_verify_bad_range(capsys):
    assert run(["verify", "--family", "path", "--from", "9", "--to", "3"], capsys)[0] == 2


def test_bounds_prism5(files, capsys):
    code, out, _ = run(["bounds", "--graph", files("g.json", family("prism", 5))], capsys)
    d = json.loads(out)
    assert code == 0
    assert d["lower"] == 6 and d["all_ones_upper"] == 10
    assert d["packing"]["upper"] == 8 and d["packing"]["size"] == 2
    assert d["upper"] == 8


def test_bounds_complete_and_path(files, capsys):
    d = json.loads(run(["bounds", "--graph", files("k.json", family("complete", 6))], capsys)[1])
    assert d["packing"]["upper"] == 5 and d["lower"] is None
    d = json.loads(run(["bounds", "--graph", files("p.json", family("path", 9))], capsys)[1])
    assert d["packing"]["upper"] == 6 and d["packing"]["vertices"] == [0, 3, 6]
    assert d["provenance"]["upper"].startswith("tree rule")


def test_construct_with_sidecar(tmp_path, capsys):
    side = tmp_path / "side.json"
    code, out, _ = run(["construct", "--family", "wheel", "--n", "8", "--sidecar", str(side)], capsys)
    assert code == 0 and sum(json.loads(out)["labels"]) == 5
    assert json.loads(side.read_text()) == {"family": "wheel", "n": 8, "claimed_weight": 5}


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "plsrd.cli", "generate", "--family", "path", "--n", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["edges"] == [[0, 1], [1, 2]]
