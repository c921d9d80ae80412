import json

import pytest

from hyperlambda.app import dispatch
from hyperlambda.commands import construct_commands
from hyperlambda.utils.constructions import complete
from hyperlambda.utils.io_utils import read_graph, write_graph


@pytest.fixture
def k5_file(tmp_path):
    path = tmp_path / "k5.hg"
    write_graph(complete(5, 3), str(path))
    return str(path)


def test_version(capsys):
    assert dispatch(["--version"]) == 0
    assert "hyperlambda" in capsys.readouterr().out


def test_missing_command_is_usage_error():
    assert dispatch([]) == 2


def test_lambda_json(k5_file, capsys):
    assert dispatch(["lambda", k5_file, "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"] == pytest.approx(0.08)
    assert data["exact"] == "2/25"
    assert data["method"] == "closed-form"


def test_lambda_summary_for_construction_name(capsys):
    assert dispatch(["lambda", "Kminus:4,3"]) == 0
    out = capsys.readouterr().out
    assert "exact: 4/81" in out
    assert "converged: true" in out


def test_construct_then_free(tmp_path, k5_file, capsys):
    f5_file = str(tmp_path / "f5.hg")
    assert dispatch(["construct", "F5", "--out", f5_file]) == 0
    assert read_graph(f5_file).edges == ((1, 2, 3), (1, 2, 4), (3, 4, 5))
    capsys.readouterr()
    assert dispatch(["free", "F5", f5_file]) == 0
    assert "free: false" in capsys.readouterr().out
    assert dispatch(["free", "C3_3", k5_file]) == 0
    assert "free: true" in capsys.readouterr().out


def test_construct_family_writes_one_file_per_member(tmp_path):
    out = tmp_path / "fr.hg"
    assert dispatch(["construct", "Fr", "4", "--out", str(out)]) == 0
    assert read_graph(str(tmp_path / "fr_0.hg")).n == 7
    assert read_graph(str(tmp_path / "fr_1.hg")).n == 6


def test_construct_list(capsys):
    assert dispatch(["construct", "--list"]) == 0
    out = capsys.readouterr().out
    assert "F5" in out
    assert "fano" in out


def test_contains_and_canon(k5_file, capsys):
    assert dispatch(["contains", "F5", k5_file]) == 0
    out = capsys.readouterr().out
    assert "contains: true" in out
    assert "embedding: 1->1" in out
    assert dispatch(["canon", "F5"]) == 0
    assert "orbits: 1 2 | 3 4 | 5" in capsys.readouterr().out


def test_dense(capsys):
    assert dispatch(["dense", "K:4,3"]) == 0
    assert "dense: true" in capsys.readouterr().out
    assert dispatch(["dense", "S2t:3"]) == 0
    out = capsys.readouterr().out
    assert "dense: false" in out
    assert "witness:" in out


def test_bad_file_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.hg"
    path.write_text("3 4\n1 2\n", encoding="utf-8")
    assert dispatch(["lambda", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_unknown_construction_exits_2(capsys):
    assert dispatch(["lambda", "nosuchgraph"]) == 2
    assert "Unknown construction" in capsys.readouterr().err


def test_negative_seed_exits_2():
    assert dispatch(["lambda", "F5", "--seed", "-1"]) == 2


def test_search_bound_violation_exits_1(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert dispatch(["search", "--n", "5", "--forbid", "F5", "--bound", "1/27",
                     "--out", str(out)]) == 1
    assert "bound 1/27: FAIL" in capsys.readouterr().out
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["bound_pass"] is False
    assert report["max_exact"] == "1/16"


def test_search_within_bound(capsys):
    assert dispatch(["search", "--n", "5", "--forbid", "F5", "--bound", "2/27",
                     "--turan"]) == 0
    out = capsys.readouterr().out
    assert "bound 2/27: pass" in out
    assert "turan number:" in out


def test_search_size_guard_exits_2(capsys):
    assert dispatch(["search", "--n", "8"]) == 2
    assert "edge slots" in capsys.readouterr().err


def test_turan(capsys):
    assert dispatch(["turan", "--n", "5", "--forbid", "K:4,3"]) == 0
    assert capsys.readouterr().out.strip() == "ex(5, K:4,3) = 7"


@pytest.mark.slow
def test_verify_quick(tmp_path):
    out = tmp_path / "ledger.json"
    assert dispatch(["verify", "--level", "quick", "--json", str(out)]) == 0
    document = json.loads(out.read_text(encoding="utf-8"))
    assert document["summary"]["fail"] == 0
    assert document["suite"] == "paper"


def test_worker_failure_exits_2(monkeypatch, capsys):
    def broken(*args, **kwargs):
        raise RuntimeError("Worker process failed in run_start: boom")

    monkeypatch.setattr(construct_commands, "build", broken)
    assert dispatch(["construct", "F5"]) == 2
    assert "Worker process failed" in capsys.readouterr().err


def test_successful_run_writes_nothing_outside_outputs(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("HOME", str(tmp_path))
    assert dispatch(["construct", "F5"]) == 0
    assert list(tmp_path.iterdir()) == []
