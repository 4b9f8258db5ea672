import json

import pytest

from coxword.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_fig1(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--system", "2A3",
                           "--z", "(1,4)(2,3)", "--kind", "inv")
    assert code == 0
    words = out.split()
    assert words == sorted(["2123", "1213", "1231", "3213", "3231",
                            "2321", "2312", "2132"])


def test_enumerate_primed_a1(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--system", "A1",
                           "--z", "s1", "--kind", "primed")
    assert code == 0
    assert out.split() == ["1", "1'"]


def test_enumerate_json(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "--system", "2A3",
                           "--z", "[4,3,2,1]", "--kind", "inv",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 8 and len(data["words"]) == 8


def test_graph_dot(capsys, tmp_path):
    out_path = tmp_path / "g.dot"
    code, _, _ = run_cli(capsys, "graph", "--system", "2A3",
                         "--z", "(1,4)(2,3)", "--kind", "inv",
                         "--out", str(out_path))
    assert code == 0
    dot = out_path.read_text()
    assert dot.count("label=\"") >= 8  # 8 nodes plus labeled edges
    assert dot.count("--") == 7
    assert "color=red" in dot


def test_stats_json(capsys):
    code, out, _ = run_cli(capsys, "stats", "--system", "2A3",
                           "--z", "(1,4)(2,3)", "--kind", "inv",
                           "--format", "json")
    assert code == 0
    stats = json.loads(out)
    assert stats["vertices"] == 8
    assert stats["edges"] == {"braid": 5, "half-braid": 2}
    assert stats["components"] == 2


def test_verify_pass_and_report(capsys, tmp_path):
    report = tmp_path / "report.jsonl"
    code, out, _ = run_cli(capsys, "verify", "--suite", "hh",
                           "--system", "2A3", "--out", str(report))
    assert code == 0
    assert "pass" in out
    lines = [json.loads(l) for l in report.read_text().splitlines()]
    assert len(lines) == 10
    assert all(rec["pass"] for rec in lines)


def test_verify_fault_injection_exit_code(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "hh",
                           "--system", "2A3",
                           "--inject-fault", "half-braid")
    assert code == 1
    assert "FAIL" in out


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--system", "NOPE",
                           "--z", "1")
    assert code == 2 and "error" in err
    code, _, err = run_cli(capsys, "enumerate", "--system", "A3",
                           "--z", "xyz")
    assert code == 2


def test_list_systems(capsys):
    code, out, _ = run_cli(capsys, "list-systems")
    assert code == 0
    assert "BC3" in out and "affA{n}" in out


def test_cache_limit_env(capsys, monkeypatch):
    monkeypatch.setenv("COXWORD_CACHE_LIMIT", "0")
    code, out, _ = run_cli(capsys, "enumerate", "--system", "A2",
                           "--z", "s1", "--kind", "inv")
    assert code == 0 and out.split() == ["1"]
