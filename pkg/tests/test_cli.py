"""End-to-end CLI behavior: outputs, exit codes, determinism."""

import io
import json

import pytest

from kappatools.cli import RunConfig, main
from kappatools.errors import GraphInputError

C5_TEXT = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"
TREE_TEXT = "4 3\n0 1\n1 2\n1 3\n"


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(C5_TEXT)
    return str(path)


@pytest.fixture
def tree_file(tmp_path):
    path = tmp_path / "tree.txt"
    path.write_text(TREE_TEXT)
    return str(path)


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_kappa_prints_value(capsys, c5_file):
    code, out, _ = run_cli(capsys, "kappa", c5_file)
    assert code == 0
    assert out == "4\n"


def test_kappa_trace_json(capsys, c5_file):
    code, out, _ = run_cli(capsys, "kappa", c5_file, "--trace", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"] == 1
    assert payload["command"] == "kappa"
    assert payload["value"] == 4
    assert payload["trace"]["rule"] == "recursion"


def test_eval_tree_at_1_0(capsys, tree_file):
    code, out, _ = run_cli(capsys, "eval", tree_file, "--point", "1", "0")
    assert code == 0
    assert out == "1\n"


def test_alpha_both_routes(capsys, c5_file):
    code, out, _ = run_cli(capsys, "alpha", c5_file)
    assert code == 0
    assert out == "bruteforce 30\ntutte 30\n"


def test_tutte_text(capsys, c5_file):
    code, out, _ = run_cli(capsys, "tutte", c5_file)
    assert code == 0
    assert out == "x^4 + x^3 + x^2 + x + y\n"


def test_classes_listing(capsys, c5_file):
    code, out, _ = run_cli(capsys, "classes", c5_file)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "classes 4"
    assert len(lines) == 5


def test_transversal_listing(capsys, c5_file):
    code, out, _ = run_cli(capsys, "transversal", c5_file, "--vertex", "0")
    assert code == 0
    assert out.splitlines()[0] == "count 4"


def test_collapse_report_and_dot(capsys, c5_file):
    code, out, _ = run_cli(capsys, "collapse", c5_file, "--edge", "1")
    assert code == 0
    assert "graph collapse {" in out
    assert "VIOLATED" not in out


def test_nu_closed_path_per_class(capsys, c5_file):
    path = json.dumps({"vertices": [0, 1, 2, 3, 4], "closed": True})
    code, out, _ = run_cli(capsys, "nu", c5_file, "--path", path, "--format", "json")
    assert code == 0
    payload = json.loads(out)
    values = sorted(item["nu"] for item in payload["per_class"])
    assert values == [-3, -1, 1, 3]


def test_nu_open_path_per_orientation(capsys, tree_file):
    path = json.dumps({"vertices": [0, 1, 2]})
    code, out, _ = run_cli(capsys, "nu", tree_file, "--path", path)
    assert code == 0
    assert len(out.splitlines()) == 8  # alpha of a 3-edge tree


def test_verify_single_graph(capsys, c5_file):
    code, out, _ = run_cli(capsys, "verify", c5_file)
    assert code == 0
    assert out.splitlines()[-1] == "graphs 1 failures 0"


def test_verify_random_corpus_is_deterministic(capsys):
    args = ("verify", "--random-corpus", "6", "--seed", "3", "--format", "json")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["summary"] == {"graphs": 6, "failures": 0}
    assert all(entry["ok"] for entry in payload["graphs"])


def test_parse_error_exit_2_with_line(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n0 1\n0 zebra\n")
    code, _, err = run_cli(capsys, "kappa", str(bad))
    assert code == 2
    assert "line 3" in err


def test_cap_exceeded_exit_3(capsys, c5_file):
    code, _, err = run_cli(capsys, "classes", c5_file, "--cap", "2")
    assert code == 3
    assert "cap of 2" in err


def test_env_cap_override(capsys, c5_file, monkeypatch):
    monkeypatch.setenv("KAPPA_BRUTE_CAP", "2")
    code, _, _ = run_cli(capsys, "classes", c5_file)
    assert code == 3
    # explicit flag wins over the environment
    code, _, _ = run_cli(capsys, "classes", c5_file, "--cap", "10")
    assert code == 0


def test_bad_env_cap_is_exit_2(capsys, c5_file, monkeypatch):
    monkeypatch.setenv("KAPPA_BRUTE_CAP", "three")
    code, _, err = run_cli(capsys, "classes", c5_file)
    assert code == 2
    assert "KAPPA_BRUTE_CAP" in err


def test_stdin_input(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(C5_TEXT))
    code, out, _ = run_cli(capsys, "kappa", "-")
    assert code == 0
    assert out == "4\n"


def test_json_reports_carry_input_hash(capsys, c5_file):
    code, out, _ = run_cli(capsys, "kappa", c5_file, "--format", "json")
    payload = json.loads(out)
    assert payload["input"]["path"] == c5_file
    assert len(payload["input"]["sha256"]) == 64


def test_input_file_is_not_modified(capsys, c5_file):
    before = open(c5_file).read()
    run_cli(capsys, "verify", c5_file)
    run_cli(capsys, "collapse", c5_file, "--edge", "0")
    assert open(c5_file).read() == before


def test_vertex_out_of_range_is_exit_2(capsys, c5_file):
    code, _, err = run_cli(capsys, "transversal", c5_file, "--vertex", "9")
    assert code == 2
    assert "out of range" in err


def test_run_config_validates_point_usage():
    with pytest.raises(GraphInputError):
        RunConfig(command="eval")
    with pytest.raises(GraphInputError):
        RunConfig(command="kappa", point=(1, 0))
    with pytest.raises(GraphInputError):
        RunConfig(command="kappa", brute_force_cap=0)
