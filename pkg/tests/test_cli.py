import json

import pytest

from qrank.cli import main
from qrank.verifier.registry import ORDER_ENV


def test_verify_selected_checks(capsys):
    assert main(["verify", "--check", "jba", "--check", "nrid", "--order", "12"]) == 0
    out = capsys.readouterr().out
    assert "2/2 passed" in out


def test_verify_json_to_file(tmp_path):
    path = tmp_path / "report.json"
    assert main(["verify", "--check", "detD_expansion", "--format", "json", "--out", str(path)]) == 0
    (rec,) = json.loads(path.read_text())
    assert rec["status"] == "PASS" and rec["order_checked"] == 11
    assert set(rec) >= {"name", "paper_anchor", "status", "order_checked", "first_mismatch", "wall_ms"}


def test_unknown_check_is_a_usage_error(capsys):
    assert main(["verify", "--check", "no_such_check"]) == 2
    assert "unknown check" in capsys.readouterr().err


def test_bad_environment_is_a_usage_error(monkeypatch, capsys):
    monkeypatch.setenv(ORDER_ENV, "-4")
    assert main(["verify", "--check", "jba"]) == 2
    assert ORDER_ENV in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["verify", "--order", "x"], ["dyson", "--mod", "6", "--max", "10"], ["frobnicate"]])
def test_argument_errors(argv, capsys):
    assert main(argv) == 2


def test_dyson_subcommand(capsys):
    assert main(["dyson", "--mod", "11", "--max", "40"]) == 0
    assert "smallest failing case 6" in capsys.readouterr().out
    assert main(["dyson", "--mod", "7", "--max", "152"]) == 0


def test_series_subcommand(capsys):
    assert main(["series", "--name", "detD", "--order", "5"]) == 0
    assert capsys.readouterr().out.strip() == "1 - 6*q + 10*q^2 + 4*q^3 - 19*q^4 + O(q^6)"
    assert main(["series", "--name", "nope"]) == 2


def test_list_subcommand(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "rankid1" in out and "zR7dis1_c" in out
