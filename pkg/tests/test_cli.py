"""CLI smoke tests."""

import json

from typer.testing import CliRunner

import superunitary.main as main_module
from superunitary.main import app


def test_classify_cli_success():
    runner = CliRunner()
    result = runner.invoke(app, ["classify", "--sig", "2,0,1", "--weight", "3,1|2"])
    assert result.exit_code == 0
    assert "su(2|1) 3,1|2: unitarizable" in result.output
    assert "fd b)(ii)  e2-d1  margin 3" in result.output


def test_classify_cli_not_unitarizable():
    runner = CliRunner()
    result = runner.invoke(app, ["classify", "--sig", "2,0,1", "--weight", "0,-1|0"])
    assert result.exit_code == 0
    assert "not unitarizable" in result.output
    assert "unitarity a)(i)" in result.output


def test_classify_cli_json_output():
    runner = CliRunner()
    result = runner.invoke(app, ["classify", "--sig", "2,0,1", "--weight", "3,1|2", "--json", "--pretty"])
    assert result.exit_code == 0
    assert result.output.strip().startswith("{")
    payload = json.loads(result.output)
    assert payload["unitarizable"] is True
    assert payload["case"] == "compact"
    assert payload["reasons"] == [{"condition": "fd b)(ii)", "root": "e2-d1", "margin": "3"}]
    assert payload["_meta"]["generator"]["name"] == "superunitary"


def test_classify_cli_noncompact():
    runner = CliRunner()
    result = runner.invoke(app, ["classify", "--sig", "1,1,1", "--weight", "-1/2,1/2|0"])
    assert result.exit_code == 0
    assert "su(1,1|1) -1/2,1/2|0: unitarizable" in result.output
    assert "ifd b)(iv)" in result.output


def test_rho_cli():
    runner = CliRunner()
    result = runner.invoke(app, ["rho", "--sig", "1,1,1", "--system", "nonstandard"])
    assert result.exit_code == 0
    assert result.output.strip() == "0,0|0"
    result = runner.invoke(app, ["rho", "--sig", "2,0,1"])
    assert result.output.strip() == "0,-1|1"


def test_rho_cli_json():
    runner = CliRunner()
    result = runner.invoke(app, ["rho", "--sig", "2,0,2", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["system"] == "standard"
    assert payload["rho"] == "-1/2,-3/2|3/2,1/2"


def test_margins_cli():
    runner = CliRunner()
    result = runner.invoke(app, ["margins", "--sig", "2,0,1", "--weight", "3,1|2"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines == ["e1-d1  6", "e2-d1  3", "Typical: yes"]


def test_margins_cli_atypical_json():
    runner = CliRunner()
    result = runner.invoke(app, ["margins", "--sig", "2,0,1", "--weight", "1/2,-1/2|1/2", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["typical"] is False
    assert payload["margins"][1] == {"root": "e2-d1", "margin": "0"}


def test_family_cli_sweep():
    runner = CliRunner()
    result = runner.invoke(app, ["family", "--sig", "2,0,2", "--a", "0,1", "--b", "2,0", "--sweep", "0:5:1/2"])
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "Thresholds: x_min=2, x_max=2"
    rows = lines[1:]
    assert len(rows) == 11
    assert sum(1 for row in rows if row.endswith("  unitarizable")) == 7
    assert rows[4].startswith("x=2  ")


def test_family_cli_json():
    runner = CliRunner()
    result = runner.invoke(app, ["family", "--sig", "1,1,1", "--lambda=-3", "--sweep=-2:2:1/2", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["thresholds"]["xL_min"] == "-3/2"
    unitarizable = [row["x"] for row in payload["verdicts"] if row["unitarizable"]]
    assert unitarizable == ["-3/2", "-1", "-1/2", "0", "1/2", "1", "3/2"]


def test_family_cli_needs_one_grid():
    runner = CliRunner()
    result = runner.invoke(app, ["family", "--sig", "2,0,1", "--x", "1", "--sweep", "0:1:1"])
    assert result.exit_code == 2


def test_family_cli_lambda_rules():
    runner = CliRunner()
    result = runner.invoke(app, ["family", "--sig", "2,0,1", "--lambda", "1", "--x", "0"])
    assert result.exit_code == 2
    result = runner.invoke(app, ["family", "--sig", "1,1,1", "--x", "0"])
    assert result.exit_code == 2


def test_gram_cli():
    runner = CliRunner()
    result = runner.invoke(app, ["gram", "--sig", "2,0,1", "--weight", "1/2,-1/2|1/2", "--eta", "e2-d1"])
    assert result.exit_code == 0
    assert "Basis (1): E3,2" in result.output
    assert "PSD: yes" in result.output
    assert "Rank: 0" in result.output
    assert "Determinant: 0" in result.output


def test_gram_cli_json_tuple_eta():
    runner = CliRunner()
    result = runner.invoke(app, ["gram", "--sig", "2,0,1", "--weight", "2,1|1", "--eta", "1,1|-2", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["entries"] == [["8"]]
    assert payload["eta"] == "1,1|-2"
    assert payload["variant"] == "plus"


def test_gram_cli_variant_mismatch():
    runner = CliRunner()
    result = runner.invoke(
        app, ["gram", "--sig", "2,0,1", "--weight", "2,1|1", "--eta", "e2-d1", "--variant", "minus_plus"]
    )
    assert result.exit_code == 2
    assert "Validation error:" in result.output


def test_ksdet_cli():
    runner = CliRunner()
    result = runner.invoke(app, ["ksdet", "--sig", "2,0,1", "--weight", "2,1|1", "--eta", "1,1|-2"])
    assert result.exit_code == 0
    assert result.output.strip() == "(4)^1 · (2)^1 = 8"


def test_ksdet_cli_eta_with_coefficient():
    runner = CliRunner()
    result = runner.invoke(app, ["ksdet", "--sig", "2,0,1", "--weight", "2,1|1", "--eta", "e1+e2-2d1"])
    assert result.exit_code == 0
    assert result.output.strip() == "(4)^1 · (2)^1 = 8"


def test_ksdet_cli_normalization():
    runner = CliRunner()
    args = ["ksdet", "--sig", "2,0,2", "--weight", "0,0|5,2", "--eta", "d1-d2"]
    assert runner.invoke(app, args).output.strip() == "(3)^1 = 3"
    printed = runner.invoke(app, args + ["--normalization", "printed", "--json"])
    assert json.loads(printed.output)["value"] == "-5"
    result = runner.invoke(app, args + ["--normalization", "other"])
    assert result.exit_code == 2


def test_oracle_cli_family():
    runner = CliRunner()
    result = runner.invoke(app, ["oracle", "--sig", "2,0,1", "--a", "0,1", "--sweep", "0:2:1"])
    assert result.exit_code == 0
    assert "3 of 3 weights agree." in result.output


def test_oracle_cli_json():
    runner = CliRunner()
    result = runner.invoke(app, ["oracle", "--sig", "2,0,1", "--weight", "1/2,-1/2|1/2", "--depth", "2", "--json"])
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["depth"] == 2
    assert payload["results"][0]["agrees"] is True
    assert payload["results"][0]["checked"] == 5


def test_oracle_cli_weight_and_family_conflict():
    runner = CliRunner()
    result = runner.invoke(app, ["oracle", "--sig", "2,0,1", "--weight", "3,1|2", "--x", "1"])
    assert result.exit_code == 2
    assert "Unexpected error" not in result.output


def test_oracle_cli_depth_limit():
    runner = CliRunner()
    result = runner.invoke(app, ["oracle", "--sig", "2,0,1", "--weight", "3,1|2", "--depth", "9"])
    assert result.exit_code == 2


def test_classify_cli_unexpected_exception(monkeypatch):
    def _raise_error(*_args, **_kwargs):
        raise RuntimeError("boom")

    monkeypatch.setattr(main_module, "classify", _raise_error)
    runner = CliRunner()
    result = runner.invoke(app, ["classify", "--sig", "2,0,1", "--weight", "3,1|2"])
    assert result.exit_code == 1
    assert "Unexpected error: boom" in result.output


def test_verbose_flag_is_accepted():
    runner = CliRunner()
    result = runner.invoke(app, ["--verbose", "rho", "--sig", "2,0,1"])
    assert result.exit_code == 0


def test_json_weights_reclassify_to_the_same_verdict():
    runner = CliRunner()
    sweeps = [
        ["family", "--sig", "2,0,2", "--a", "0,1", "--b", "2,0", "--sweep", "0:5:1/2", "--json"],
        ["family", "--sig", "1,1,1", "--lambda=-3", "--sweep=-2:2:1/2", "--json"],
        ["family", "--sig", "1,1,2", "--lambda=-2", "--b", "1,0", "--sweep=-2:2:1/2", "--json"],
    ]
    for args in sweeps:
        payload = json.loads(runner.invoke(app, args).output)
        for row in payload["verdicts"]:
            again = runner.invoke(app, ["classify", "--sig", args[2], f"--weight={row['weight']}", "--json"])
            assert again.exit_code == 0
            verdict = json.loads(again.output)
            assert verdict["weight"] == row["weight"]
            for key in ("unitarizable", "case", "reasons"):
                assert verdict[key] == row[key], (row["weight"], key)
