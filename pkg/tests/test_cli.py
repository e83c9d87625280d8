import json

import pytest

from src.main import main
from src.modules.csp.codec import parse, parse_assignment, serialize
from src.modules.graph.codec import parse_graph
from src.modules.oracles.bounds import chernoff_bound
from tests.factories import EQUALITY, INEQUALITY, make_instance


def _stdout_json(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


def _stderr_json(capsys) -> dict:
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


@pytest.fixture
def edge_file(tmp_path):
    path = tmp_path / "edge.json"
    path.write_text(serialize(make_instance((2, 2), [(0, 1, EQUALITY)], left=(0,))))
    return path


@pytest.fixture
def triangle_file(tmp_path):
    inst = make_instance((2, 2, 2), [(0, 1, INEQUALITY), (1, 2, INEQUALITY), (0, 2, INEQUALITY)])
    path = tmp_path / "triangle.json"
    path.write_text(serialize(inst))
    return path


# === gen ===
def test_gen_planted_writes_both_files(tmp_path):
    out, planted = tmp_path / "inst.json", tmp_path / "planted.json"
    code = main([
        "gen", "planted", "--n-a", "4", "--n-b", "4", "--d1", "2", "--d2", "2",
        "--r-left", "3", "--seed", "7", "--out", str(out), "--planted-out", str(planted),
    ])
    assert code == 0
    inst = parse(out.read_text())
    assert inst.num_edges == 8
    assert len(parse_assignment(planted.read_text()).labels) == 8


def test_gen_random_to_stdout(capsys):
    code = main([
        "gen", "random", "--n", "10", "--d", "3", "--alphabet", "2", "--edges", "12", "--seed", "1",
    ])
    assert code == 0
    inst = parse(capsys.readouterr().out)
    assert inst.max_degree <= 3


# === reduce-* ===
def test_reduce_copy(edge_file, capsys):
    assert main(["reduce-copy", "--input", str(edge_file), "--c1", "2", "--c2", "3"]) == 0
    assert parse(capsys.readouterr().out).num_edges == 6


def test_reduce_subsample_with_report(tmp_path, capsys):
    source = tmp_path / "planted.json"
    main([
        "gen", "planted", "--n-a", "6", "--n-b", "6", "--d1", "2", "--d2", "2",
        "--r-left", "2", "--seed", "3", "--out", str(source),
    ])
    report = tmp_path / "report.json"
    code = main([
        "reduce-subsample", "--input", str(source), "--d-a", "1", "--d-b", "1",
        "--delta", "0.01", "--nu", "0.5", "--p", "1", "--seed", "0", "--report", str(report),
    ])
    assert code == 0
    assert parse(capsys.readouterr().out).max_degree <= 1
    ledger = json.loads(report.read_text())
    assert ledger["params"]["C"] == 2
    assert ledger["report"]["kept_edges"] == 12


def test_reduce_subsample_rejects_degree_mismatch(edge_file, capsys):
    code = main([
        "reduce-subsample", "--input", str(edge_file), "--d-a", "2", "--d-b", "1",
        "--delta", "0.01", "--nu", "0.5", "--seed", "0",
    ])
    assert code == 1
    error = _stderr_json(capsys)
    assert error["code"] == "PARAMETER_ERROR"
    assert error["detail"]["parameter"] == "d_a"


@pytest.mark.parametrize("flag", ["--d-a", "--d-b"])
def test_reduce_subsample_rejects_zero_degree(edge_file, capsys, flag):
    degrees = {"--d-a": "1", "--d-b": "1", flag: "0"}
    code = main([
        "reduce-subsample", "--input", str(edge_file),
        "--d-a", degrees["--d-a"], "--d-b", degrees["--d-b"],
        "--delta", "0.01", "--nu", "0.5", "--seed", "0",
    ])
    assert code == 1
    error = _stderr_json(capsys)
    assert error["code"] == "PARAMETER_ERROR"
    assert error["detail"]["parameter"] == flag[2:].replace("-", "_")


def test_fglss_then_claw_check(edge_file, tmp_path, capsys):
    graph_file = tmp_path / "graph.json"
    assert main(["reduce-fglss", "--input", str(edge_file), "--out", str(graph_file)]) == 0
    assert parse_graph(graph_file.read_text()).n == 2

    assert main(["check-claw", "--input", str(graph_file), "--k", "3"]) == 0
    record = _stdout_json(capsys)
    assert record["value"] is True
    assert record["witness"] is None

    assert main(["solve-exact", "--input", str(graph_file), "--target", "indep"]) == 0
    assert _stdout_json(capsys)["value"] == 1


# === solvers ===
def test_solve_exact_value(triangle_file, capsys):
    assert main(["solve-exact", "--input", str(triangle_file)]) == 0
    record = _stdout_json(capsys)
    assert record["exact"] == "2/3"
    assert record["witness"] == [0, 0, 1]


def test_approx_certificate(triangle_file, capsys):
    assert main(["approx", "--input", str(triangle_file), "--d", "2"]) == 0
    result = _stdout_json(capsys)
    assert result["exact"] == "2/3"
    assert set(result["certificate"]["marginals"].values()) == {"2/3"}


def test_bounds_tail(capsys):
    assert main(["bounds", "--mu", "0.2", "--m", "100", "--theta", "0.3"]) == 0
    assert _stdout_json(capsys)["value"] == pytest.approx(chernoff_bound(0.2, 100, 0.3))


def test_bounds_tail_needs_theta(capsys):
    assert main(["bounds", "--mu", "0.2", "--m", "100"]) == 1
    error = _stderr_json(capsys)
    assert error["code"] == "PARAMETER_ERROR"
    assert error["detail"] == {"parameter": "theta"}


def test_missing_input_file(tmp_path, capsys):
    assert main(["solve-exact", "--input", str(tmp_path / "nope.json")]) == 1
    assert _stderr_json(capsys)["code"] == "PARSE_ERROR"


# === dict-test ===
def test_dict_test_dictator(capsys):
    code = main(["dict-test", "--R", "8", "--t", "3", "--L", "2", "--seed", "0", "--function", "dictator:1"])
    assert code == 0
    record = _stdout_json(capsys)
    assert record["value"] == 1.0
    assert record["inputs"]["balanced"] is True


def test_dict_test_emits_gadget(capsys):
    code = main(["dict-test", "--R", "8", "--t", "3", "--seed", "0", "--function", "random"])
    assert code == 0
    gadget = _stdout_json(capsys)["gadget"]
    graph = parse_graph(json.dumps(gadget["graph"]))
    assert graph.n == 8
    assert set(graph.degrees) == {3}
    pairs = {tuple(p) for p in gadget["pairs"]}
    assert len(pairs) == 2 * graph.num_edges
    assert all((j, i) in pairs and graph.has_edge(i, j) for i, j in pairs)


@pytest.mark.parametrize("function", ["majority", "dictator:x", "constant:"])
def test_dict_test_rejects_bad_function(capsys, function):
    code = main(["dict-test", "--R", "8", "--t", "3", "--seed", "0", "--function", function])
    assert code == 1
    assert _stderr_json(capsys)["code"] == "PARAMETER_ERROR"


# === pipeline and sweep ===
PIPELINE = {
    "kind": "ug_2csp",
    "d": 2,
    "seed": 1,
    "planted": {"n_a": 4, "n_b": 4, "d1": 1, "d2": 1, "r_left": 2, "extra_density": 0.0},
    "override_p": 1.0,
    "exact_checks": False,
}


def test_pipeline_command(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps(PIPELINE))
    assert main(["pipeline", "--config", str(config)]) == 0
    report = _stdout_json(capsys)
    assert report["ok"] is True
    assert report["checks"]["completeness_ok"] is True


def test_pipeline_rejects_bad_config(tmp_path, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({**PIPELINE, "d": None}))
    assert main(["pipeline", "--config", str(config)]) == 1
    assert _stderr_json(capsys)["code"] == "PARSE_ERROR"


def test_sweep_command(tmp_path, capsys):
    config = tmp_path / "sweep.json"
    config.write_text(json.dumps({"base": PIPELINE, "grid": [{"epsilon": 0.1}, {"epsilon": 0.3}], "seeds": [0, 1]}))
    csv_path = tmp_path / "rows.csv"
    assert main(["sweep", "--config", str(config), "--workers", "2", "--csv", str(csv_path)]) == 0
    summary = _stdout_json(capsys)
    assert len(summary["rows"]) == 4
    assert len(summary["cells"]) == 2
    assert len(csv_path.read_text().splitlines()) == 5
