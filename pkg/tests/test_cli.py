import json

import pytest

from nilcomm.cli import main, run_sweep


def test_invariants_headline(capsys):
    assert main(["invariants", "-p", "5,4,3,3,2,1"]) == 0
    out = capsys.readouterr().out
    assert "(12,5,1)" in out
    assert "lambda_U" in out
    assert "r_P       3" in out
    assert "anchors [2, 3]" in out


def test_invariants_singleton(capsys):
    assert main(["invariants", "-p", "1"]) == 0
    out = capsys.readouterr().out
    assert out.count("(1)") >= 2


def test_invariants_max_simple_only(capsys):
    assert main(["invariants", "-p", "6,6,5,4,3,2,2,1,1", "--max-simple"]) == 0
    out = capsys.readouterr().out
    assert "size 17" in out and "[5]" in out
    assert "lambda" not in out


def test_invariants_rejects_bad_partition(capsys):
    assert main(["invariants", "-p", "0,2"]) == 2
    assert "error" in capsys.readouterr().err


def test_verify_small_range(capsys):
    assert main(["verify", "1", "6"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out
    assert "n=6: 11 partitions checked" in out


def test_verify_rejects_bad_range(capsys):
    assert main(["verify", "3", "2"]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["verify", "0", "2"]) == 2


def test_verify_json_report(capsys):
    assert main(["verify", "1", "4", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == 1
    assert data["failures"] == []
    assert len(data["records"]) == 1 + 2 + 3 + 5


def test_verify_with_matrix(capsys):
    assert main(["verify", "1", "5", "--with-matrix", "--prime", "1000003",
                 "--samples", "3", "--seed", "42"]) == 0
    out = capsys.readouterr().out
    assert "conjecture equality: 18/18" in out


def test_run_sweep_records():
    report = run_sweep(1, 5, with_matrix=True, samples=3, seed=42)
    assert report.ok
    assert report.conjecture_checked == 18
    assert report.conjecture_agreed == 18
    rec = next(r for r in report.records if r["P"] == [2, 1])
    assert rec["lambda_U"] == [3]
    assert rec["Q_est"] == [3]


def test_verify_trace_cap_overflow_is_a_hard_failure(capsys):
    assert main(["verify", "6", "6", "--trace-cap", "1"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_verify_strict_conjecture_passes_when_types_agree(capsys):
    assert main(["verify", "1", "4", "--with-matrix", "--samples", "2",
                 "--seed", "42", "--strict-conjecture"]) == 0
    assert "PASS" in capsys.readouterr().out


def test_prime_env_override(monkeypatch):
    from nilcomm.cli import build_parser
    monkeypatch.setenv("NILCOMM_PRIME", "999983")
    args = build_parser().parse_args(["verify", "1", "2"])
    assert args.prime == 999983


def test_export_dot(capsys):
    assert main(["export", "-p", "4,2,2,1,1", "--format", "dot"]) == 0
    first = capsys.readouterr().out
    assert first.startswith("digraph")
    assert first.count("->") == 12
    assert main(["export", "-p", "4,2,2,1,1", "--format", "dot"]) == 0
    assert capsys.readouterr().out == first


def test_export_json(capsys):
    assert main(["export", "-p", "1", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == 1
    assert data["P"] == [1]
    assert data["lambda"] == [1] and data["lambda_U"] == [1]
    assert data["r_P"] == 1
    assert data["poset"]["vertices"] == [[1, 1, 1]]
    assert data["canonical_process"]["Q"] == [1]


def test_export_to_file(tmp_path, capsys):
    out = tmp_path / "poset.dot"
    assert main(["export", "-p", "2,1", "--format", "dot", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert out.read_text().startswith("digraph")


def test_export_unknown_format_rejected():
    with pytest.raises(SystemExit):
        main(["export", "-p", "2,1", "--format", "yaml"])
