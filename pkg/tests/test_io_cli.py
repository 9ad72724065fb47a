import json

import pytest

from radiolab import io
from radiolab.cli import main
from radiolab.families import FamilySpec, family_graph, pw_center_vertices
from radiolab.graph import build_graph, path, wheel
from radiolab.labeling import Labeling


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_family(tmp_path, family, m, n):
    target = tmp_path / f"{family}-{m}-{n}.txt"
    io.write_edge_list(family_graph(FamilySpec(family, m, n)), target)
    return str(target)


def test_edge_list_round_trip():
    g = wheel(5)
    h = io.parse_edge_list(io.format_edge_list(g))
    assert h.edges == g.edges and h.names == g.names


def test_edge_list_comments_and_errors():
    g = io.parse_edge_list("# triangle\n3\n0 1  # first\n1 2\n0 2\n")
    assert g.num_edges == 3
    with pytest.raises(io.FormatError):
        io.parse_edge_list("")
    with pytest.raises(io.FormatError):
        io.parse_edge_list("3\n0 1 2\n")
    with pytest.raises(io.FormatError):
        io.parse_edge_list("2\nname 0 a\n0 1\n")


def test_labeling_round_trip():
    lab = Labeling((0, 3, 1), (0, 2, 1))
    back = io.labeling_from_dict(json.loads(io.dumps(io.labeling_to_dict(lab))), 3)
    assert back == lab


def test_labeling_missing_and_unknown():
    with pytest.raises(io.FormatError):
        io.labeling_from_dict({"labels": {"0": 0, "1": 2}}, 3)
    with pytest.raises(io.FormatError):
        io.labeling_from_dict({"labels": {"0": 0, "1": 2, "5": 1}}, 2)
    with pytest.raises(io.FormatError):
        io.labeling_from_dict({}, 2)


def test_gen_counts(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--family", "path-wheel", "-m", "7", "-n", "7")
    assert code == 0 and io.parse_edge_list(out).p == 56
    target = tmp_path / "star.txt"
    code, _, err = run(capsys, "gen", "--family", "path-star", "-m", "3", "-n", "7", "--out", str(target))
    assert code == 0 and io.read_edge_list(target).p == 24
    assert "24 vertices" in err


def test_gen_below_hypothesis(capsys):
    code, out, err = run(capsys, "gen", "--family", "path-wheel", "-m", "2", "-n", "7")
    assert code == 2 and out == ""
    assert "m below theorem hypothesis" in err


def test_gen_outside_hypothesis_allowed(capsys):
    code, out, err = run(capsys, "gen", "--family", "path-wheel", "-m", "3", "-n", "5", "--outside-hypothesis")
    assert code == 0 and "outside theorem hypothesis" in err


def test_label_friendship(capsys):
    code, out, _ = run(capsys, "label", "--family", "path-friendship", "-m", "8", "-n", "4")
    data = json.loads(out)
    assert code == 0 and data["span"] == 295 and data["certificate"]["certified"]


def test_label_path_complete_is_input_error(capsys):
    code, _, err = run(capsys, "label", "--family", "path-complete", "-m", "4", "-n", "3")
    assert code == 2 and "closed form" in err


def test_label_literal_sigma_fails_certification(capsys):
    code, out, _ = run(capsys, "label", "--family", "path-wheel", "-m", "4", "-n", "9", "--literal-sigma")
    assert code == 3
    assert json.loads(out)["certificate"]["certified"] is False


def test_label_output_verifies(capsys, tmp_path):
    graph = write_family(tmp_path, "path-wheel", 7, 7)
    code, out, _ = run(capsys, "label", "--family", "path-wheel", "-m", "7", "-n", "7")
    assert code == 0
    lab_path = tmp_path / "lab.json"
    lab_path.write_text(out)
    code, out, _ = run(capsys, "verify", "--graph", graph, "--labeling", str(lab_path))
    assert code == 0 and json.loads(out)["valid"]

    data = json.loads(lab_path.read_text())
    victim = data["ordering"][10]
    data["labels"][str(victim)] -= 1
    lab_path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "verify", "--graph", graph, "--labeling", str(lab_path))
    rep = json.loads(out)
    assert code == 3 and not rep["valid"]
    assert any(victim in (v["u"], v["v"]) for v in rep["violations"])

    del data["labels"]["0"]
    lab_path.write_text(json.dumps(data))
    code, _, err = run(capsys, "verify", "--graph", graph, "--labeling", str(lab_path))
    assert code == 2 and "missing" in err


def test_verify_bad_inputs(capsys, tmp_path):
    code, _, _ = run(capsys, "verify", "--graph", str(tmp_path / "nope.txt"), "--labeling", "x")
    assert code == 2
    graph = tmp_path / "g.txt"
    graph.write_text("2\n0 1\n")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, _ = run(capsys, "verify", "--graph", str(graph), "--labeling", str(bad))
    assert code == 2


def test_bound_with_center(capsys, tmp_path):
    graph = write_family(tmp_path, "path-wheel", 8, 7)
    center = ",".join(map(str, pw_center_vertices(8, 7)))
    code, out, _ = run(capsys, "bound", "--graph", graph, "--center", center)
    data = json.loads(out)
    assert code == 0 and data["bound"] == 263
    assert (data["p"], data["d"], data["k"], data["delta"]) == (64, 9, 1, 0)


def test_bound_auto(capsys, tmp_path):
    graph = write_family(tmp_path, "path-wheel", 7, 7)
    code, out, _ = run(capsys, "bound", "--graph", graph, "--auto", "--max-center-size", "2")
    assert code == 0 and json.loads(out)["bound"] >= 206


def test_bound_single_edge(capsys, tmp_path):
    graph = tmp_path / "edge.txt"
    io.write_edge_list(path(2), graph)
    code, out, _ = run(capsys, "bound", "--graph", str(graph), "--center", "0,1")
    assert code == 0 and json.loads(out)["bound"] == 1
    code, _, _ = run(capsys, "bound", "--graph", str(graph), "--center", "0,7")
    assert code == 2
    code, _, _ = run(capsys, "bound", "--graph", str(graph), "--center", "a")
    assert code == 2


def test_exact_p3_and_budget(capsys, tmp_path):
    graph = tmp_path / "p3.txt"
    io.write_edge_list(path(3), graph)
    code, out, _ = run(capsys, "exact", "--graph", str(graph))
    assert code == 0 and json.loads(out)["rn"] == 3
    big = write_family(tmp_path, "path-wheel", 3, 7)
    code, out, err = run(capsys, "exact", "--graph", big, "--budget", "0.05")
    assert code == 4 and json.loads(out)["status"] == "budget-exhausted"
    assert "budget exhausted" in err


def test_mdst_report(capsys, tmp_path):
    graph = tmp_path / "c5.txt"
    io.write_edge_list(build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]), graph)
    code, out, _ = run(capsys, "mdst", "--graph", str(graph), "--center", "0")
    data = json.loads(out)
    assert code == 0 and len(data["kept_edges"]) == 4
    assert data["observation"]["diameter_preserved"] is False
    assert "a" in data["observation"]["witnesses"]


def test_reduce_from_files(capsys, tmp_path):
    graph = write_family(tmp_path, "path-wheel", 7, 7)
    _, out, _ = run(capsys, "label", "--family", "path-wheel", "-m", "7", "-n", "7")
    lab = tmp_path / "lab.json"
    lab.write_text(out)
    center = ",".join(map(str, pw_center_vertices(7, 7)))
    code, out, _ = run(capsys, "reduce", "--graph", graph, "--center", center, "--labeling", str(lab))
    data = json.loads(out)
    assert code == 0 and data["all_certified"]
    assert {s["span"] for s in data["steps"]} == {206}


def test_reduce_family_targets(capsys):
    code, out, _ = run(capsys, "reduce", "--family", "path-wheel", "-m", "4", "-n", "7", "--target", "path-star")
    assert code == 0 and json.loads(out)["initial_span"] == 67
    code, out, _ = run(capsys, "reduce", "--family", "path-friendship", "-m", "3", "-n", "4",
                       "--target", "path-friendship")
    assert code == 0 and json.loads(out)["constant_span"]


def test_grid(capsys, monkeypatch):
    monkeypatch.setenv("RADIOLAB_THREADS", "2")
    code, out, _ = run(capsys, "grid", "path-wheel", "3..8", "7..10")
    data = json.loads(out)
    assert code == 0 and data["all_certified"] and len(data["rows"]) == 24
    assert [(r["m"], r["n"]) for r in data["rows"]][:2] == [(3, 7), (3, 8)]


def test_grid_failures(capsys):
    code, _, _ = run(capsys, "grid", "path-wheel", "3..4", "x")
    assert code == 2
    code, out, _ = run(capsys, "grid", "path-wheel", "4", "9", "--literal-sigma")
    assert code == 3 and not json.loads(out)["all_certified"]


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["label", "--family", "nope", "-m", "3", "-n", "7"]) == 2
    capsys.readouterr()
