"""Tests for CLI error branches and exit codes."""

import sys

import pytest
from typer.testing import CliRunner

from superunitary.main import EXIT_USAGE, EXIT_VALIDATION, app, main


def test_classify_cli_pretty_without_json_fails():
    runner = CliRunner()
    result = runner.invoke(app, ["classify", "--sig", "2,0,1", "--weight", "3,1|2", "--pretty"])
    assert result.exit_code == 1
    assert "Use --pretty with --json." in result.output


def test_invalid_signature_is_a_validation_error():
    runner = CliRunner()
    result = runner.invoke(app, ["rho", "--sig", "0,0,1"])
    assert result.exit_code == EXIT_VALIDATION
    assert "Validation error:" in result.output


def test_excluded_signature_is_a_validation_error():
    runner = CliRunner()
    result = runner.invoke(app, ["rho", "--sig", "1,0,1"])
    assert result.exit_code == EXIT_VALIDATION
    assert "sl(1|1)" in result.output


def test_invalid_family_is_a_validation_error():
    runner = CliRunner()
    result = runner.invoke(app, ["family", "--sig", "2,0,2", "--a", "0,-1", "--x", "1"])
    assert result.exit_code == EXIT_VALIDATION
    assert "Validation error:" in result.output


def test_psl_constraint_is_a_validation_error():
    runner = CliRunner()
    result = runner.invoke(app, ["classify", "--sig", "2,0,2", "--weight", "1,1|0,0", "--psl"])
    assert result.exit_code == EXIT_VALIDATION
    assert "psl(n|n)" in result.output


def test_main_usage_error_exits_64(monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", ["superunitary", "classify", "--sig", "2,0,1", "--weight", "1|2"])
    with pytest.raises(SystemExit) as excinfo:
        main()
    assert excinfo.value.code == EXIT_USAGE
    assert "Unexpected error" not in capsys.readouterr().err


def test_main_missing_option_exits_64(monkeypatch):
    monkeypatch.setattr(sys, "argv", ["superunitary", "classify", "--sig", "2,0,1"])
    with pytest.raises(SystemExit) as excinfo:
        main()
    assert excinfo.value.code == EXIT_USAGE


def test_main_unknown_system_exits_64(monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", ["superunitary", "rho", "--sig", "2,0,1", "--system", "non"])
    with pytest.raises(SystemExit) as excinfo:
        main()
    assert excinfo.value.code == EXIT_USAGE
    assert "nonstandard" in capsys.readouterr().err


def test_main_validation_error_exits_2(monkeypatch):
    monkeypatch.setattr(sys, "argv", ["superunitary", "rho", "--sig", "0,0,1"])
    with pytest.raises(SystemExit) as excinfo:
        main()
    assert excinfo.value.code == EXIT_VALIDATION


def test_main_success_exits_0(monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", ["superunitary", "rho", "--sig", "2,0,1"])
    with pytest.raises(SystemExit) as excinfo:
        main()
    assert excinfo.value.code == 0
    assert capsys.readouterr().out.strip() == "0,-1|1"


def test_main_unknown_flag_exits_64(monkeypatch):
    monkeypatch.setattr(sys, "argv", ["superunitary", "rho", "--sig", "2,0,1", "--bogus"])
    with pytest.raises(SystemExit) as excinfo:
        main()
    assert excinfo.value.code == EXIT_USAGE


@pytest.mark.parametrize(
    "argv",
    [
        ["oracle", "--sig", "2,0,1", "--weight", "3,1|2", "--x", "1"],
        ["oracle", "--sig", "2,0,1", "--weight", "3,1|2", "--depth", "9"],
        ["family", "--sig", "2,0,1", "--x", "1", "--sweep", "0:1:1"],
        ["family", "--sig", "1,1,1", "--x", "0"],
        ["ksdet", "--sig", "2,0,2", "--weight", "0,0|5,2", "--eta", "d1-d2", "--normalization", "other"],
        ["gram", "--sig", "2,0,1", "--weight", "2,1|1", "--eta", "e9-d1"],
    ],
)
def test_main_flag_conflicts_exit_64(monkeypatch, capsys, argv):
    monkeypatch.setattr(sys, "argv", ["superunitary", *argv])
    with pytest.raises(SystemExit) as excinfo:
        main()
    assert excinfo.value.code == EXIT_USAGE
    assert "Unexpected error" not in capsys.readouterr().err
