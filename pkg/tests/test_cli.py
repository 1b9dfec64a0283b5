import io
import json
import sys

import pytest

from stemleaf.cli import main
from stemleaf.extremal import ExtremalParamsH, build_h
from stemleaf.graph import path_graph, to_edge_list, to_graph6


def run(argv, stdin="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin="": run(argv, stdin, monkeypatch, capsys)


def test_gen_then_find_pipeline(cli):
    code, text, _ = cli(["gen", "g", "--t", "3", "--k", "2", "--m", "1"])
    assert code == 0
    code, out, err = cli(["find", "-", "--l", "2", "--t", "3", "--method", "exact"], text)
    assert code == 0
    result = json.loads(out)
    assert result["status"] == "exhausted"
    assert result["k1t_free"] is True


def test_find_auto_falls_back_to_exact(cli):
    text = to_edge_list(build_h(ExtremalParamsH(4, 1)).graph)
    code, out, _ = cli(["find", "-", "--l", "2", "--t", "4"], text)
    result = json.loads(out)
    assert result["status"] == "certified_fail"
    assert result["certificate"]["kind"] == "exception_case"
    assert result["certificate_valid"] is True
    assert result["cross_check"]["exact_status"] == "exhausted"


def test_find_default_t(cli):
    code, out, _ = cli(["find", "-", "--l", "2"], to_graph6(path_graph(5)))
    result = json.loads(out)
    assert result["t"] == 3 and result["status"] == "found" and result["verified"]


def test_inspect(cli):
    text = to_edge_list(build_h(ExtremalParamsH(4, 1)).graph)
    code, out, _ = cli(["inspect", "-", "--t", "4", "--l", "2"], text)
    rep = json.loads(out)
    assert code == 0
    assert rep["hypothesis_holds"] and rep["l_equals_t_minus_2"]
    code, out, _ = cli(["inspect", "-", "--t", "4"], text)
    summary = json.loads(out)
    assert len(summary["reports"]) == summary["alpha4"]


def test_inspect_infinite_sigma(cli):
    code, out, _ = cli(["inspect", "-", "--t", "3", "--l", "2"], "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    assert json.loads(out)["sigma4"] == "+inf"


def test_gen_files(cli, tmp_path):
    out = tmp_path / "h.g6"
    code, _, _ = cli(["gen", "h", "--t", "5", "--m", "2", "--format", "graph6", "--out", str(out)])
    assert code == 0
    labels = json.loads((tmp_path / "h.g6.labels.json").read_text())
    assert labels["family"] == "H" and labels["l"] == 3
    assert len(out.read_text().split()) == 1


def test_verify_and_figure(cli, tmp_path):
    stream = tmp_path / "s.g6"
    stream.write_text("\n".join(to_graph6(path_graph(n)) for n in range(1, 7)) + "\n")
    fig = tmp_path / "fig.png"
    code, out, err = cli(["verify", str(stream), "--t", "3", "--l", "2", "--figure", str(fig)])
    assert code == 0
    rep = json.loads(out)
    assert rep["total"] == 6 and rep["counterexamples"] == []
    assert "per_instance" not in rep
    assert fig.stat().st_size > 0


def test_verify_counterexample_exit_code(cli, tmp_path):
    # l = 1 is outside the guarantee, P4 gets through every gate
    stream = tmp_path / "p4.g6"
    stream.write_text(to_graph6(path_graph(4)) + "\n")
    code, out, _ = cli(["verify", str(stream), "--t", "4", "--l", "1"])
    assert code == 1
    assert len(json.loads(out)["counterexamples"]) == 1


def test_verify_empty_stream(cli):
    code, out, _ = cli(["verify", "-", "--t", "3", "--l", "2"], "")
    assert code == 0 and json.loads(out)["total"] == 0


def test_sample(cli):
    code, out, _ = cli(["sample", "--n", "7", "--count", "3", "--seed", "5"])
    assert code == 0 and len(out.split()) == 3


@pytest.mark.parametrize("argv,stdin", [
    (["inspect", "/nonexistent/file", "--t", "3"], ""),
    (["find", "-", "--l", "2"], "3 1\n0 5\n"),
    (["find", "-", "--l", "2"], "4 1\n0 1\n"),
    (["gen", "g", "--t", "2", "--k", "1", "--m", "1"], ""),
    (["verify", "-", "--t", "3", "--l", "2", "--solver", "nope"], ""),
    (["inspect", "-"], ""),
])
def test_usage_errors(cli, argv, stdin):
    with pytest.raises(SystemExit) as exc:
        code, _, err = cli(argv, stdin)
        raise SystemExit(code)
    assert exc.value.code == 2
