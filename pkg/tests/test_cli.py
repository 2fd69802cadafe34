"""Command line behavior: subcommands, exit codes, and output contracts."""

import json

import pytest

from zetasech.cli import main
from zetasech.verifier import from_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_prints_manifest(capsys):
    code, out, _ = run_cli(capsys, "list")
    assert code == 0
    assert "Theorem4" in out
    assert "J2Jbar" in out
    assert out.strip().endswith("119 identities, 994 cases")


def test_list_filters_by_group(capsys):
    code, out, _ = run_cli(capsys, "list", "--group", "F")
    assert code == 0
    assert "Casem1" in out
    assert "Theorem4 " not in out


def test_run_single_identity_passes(capsys):
    code, out, _ = run_cli(capsys, "run", "--id", "SinId")
    assert code == 0
    assert "PASS" in out


def test_run_unknown_identity_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "run", "--id", "Nope")
    assert code == 2
    assert "Nope" in err


def test_run_unknown_group_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "run", "--group", "Q")
    assert code == 2
    assert "Q" in err


def test_bogus_subcommand_is_usage_error(capsys):
    assert run_cli(capsys, "frobnicate")[0] == 2


def test_run_stdout_is_deterministic(capsys):
    argv = ("run", "--id", "SinId", "--id", "EuId", "-v")
    code, first, _ = run_cli(capsys, *argv)
    assert code == 0
    code, second, _ = run_cli(capsys, *argv)
    assert code == 0
    assert first == second


def test_report_json_stdout_strips_timings(tmp_path, capsys):
    saved = tmp_path / "r.json"
    run_cli(capsys, "run", "--id", "SinId", "--out", str(saved))
    code, out, _ = run_cli(capsys, "report", str(saved), "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert "elapsed_ms" not in doc
    assert all("ms" not in case for case in doc["cases"])


def test_run_verbose_lists_cases(capsys):
    code, out, _ = run_cli(capsys, "run", "--id", "SinId", "--format", "csv", "-v")
    assert code == 0
    assert out.count("SinId") >= 3


def test_run_writes_report_file(tmp_path, capsys):
    out_path = tmp_path / "report.json"
    code, _, _ = run_cli(capsys, "run", "--id", "SinId", "--out", str(out_path))
    assert code == 0
    suite = from_json(out_path.read_text())
    assert suite.ok


def test_run_exit_one_on_failure(tmp_path, capsys):
    bad = tmp_path / "bad.cat"
    bad.write_text(
        "[identity Wrong]\n"
        "group = A\n"
        "kind = NUMERIC\n"
        "tol = TIGHT\n"
        "paper = probe\n"
        "lhs = 2 + 2\n"
        "rhs = 5\n"
    )
    code, out, _ = run_cli(capsys, "run", "--catalog", str(bad))
    assert code == 1
    assert "FAIL" in out


def test_run_tol_override_flag(capsys):
    code, _, _ = run_cli(capsys, "run", "--id", "SinId", "--tol", "TIGHT=1e-2")
    assert code == 0
    code, _, err = run_cli(capsys, "run", "--id", "SinId", "--tol", "TIGHT=nope")
    assert code == 2


def test_eval_prints_value_and_budget(capsys):
    code, out, _ = run_cli(capsys, "eval", "digamma(7/8) - digamma(3/8)")
    assert code == 0
    value = float(out.splitlines()[0])
    assert abs(value - 1.9499819775974445) < 1e-12
    assert "err_budget" in out


def test_eval_with_parameters(capsys):
    code, out, _ = run_cli(capsys, "eval", "hzeta(s, a)", "--param", "s=2", "-p", "a=1")
    assert code == 0
    assert abs(float(out.splitlines()[0]) - 1.6449340668482264) < 1e-12


def test_eval_exact_mode_prints_fraction(capsys):
    code, out, _ = run_cli(capsys, "eval", "--exact", "bernpoly(4, 1/2)")
    assert code == 0
    assert out.splitlines()[0].strip() == "7/240"


def test_eval_rejects_bad_expression(capsys):
    code, _, err = run_cli(capsys, "eval", "sin(")
    assert code == 2
    assert "line 1" in err


def test_eval_rejects_bad_parameter(capsys):
    assert run_cli(capsys, "eval", "s", "--param", "s")[0] == 2


def test_quad_matches_documented_example(capsys):
    code, out, _ = run_cli(
        capsys, "quad", "v*arctan(2*v)/cosh(pi*v)", "--decay", "3.14159"
    )
    assert code == 0
    assert abs(float(out.splitlines()[0]) - 0.15231869459234065) < 1e-9


def test_quad_honors_var_flag(capsys):
    code, out, _ = run_cli(capsys, "quad", "exp(-pi*t)", "--var", "t")
    assert code == 0
    assert abs(float(out.splitlines()[0]) - 1.0 / 3.141592653589793) < 1e-10


def test_quad_reports_position_on_bad_body(capsys):
    code, _, err = run_cli(capsys, "quad", "v*")
    assert code == 2
    assert "column 3" in err


def test_export_then_run_reproduces_builtin(tmp_path, capsys):
    cat = tmp_path / "subset.cat"
    code, _, _ = run_cli(capsys, "export-catalog", "--group", "E", "--out", str(cat))
    assert code == 0
    ref_out = tmp_path / "ref.json"
    got_out = tmp_path / "got.json"
    assert run_cli(capsys, "run", "--group", "E", "--out", str(ref_out))[0] == 0
    assert run_cli(capsys, "run", "--catalog", str(cat), "--out", str(got_out))[0] == 0
    ref = json.loads(ref_out.read_text())
    got = json.loads(got_out.read_text())
    for doc in (ref, got):
        doc.pop("elapsed_ms", None)
        for case in doc["cases"]:
            case.pop("ms", None)
    assert ref == got


def test_export_catalog_to_stdout(capsys):
    code, out, _ = run_cli(capsys, "export-catalog", "--id", "SinId")
    assert code == 0
    assert "[identity SinId]" in out


def test_report_rerenders_saved_json(tmp_path, capsys):
    saved = tmp_path / "r.json"
    run_cli(capsys, "run", "--id", "SinId", "--out", str(saved))
    code, out, _ = run_cli(capsys, "report", str(saved))
    assert code == 0
    assert "| identity |" in out
    code, out, _ = run_cli(capsys, "report", str(saved), "--format", "csv")
    assert code == 0
    assert out.startswith("identity,")


def test_report_missing_file_is_io_error(capsys):
    code, _, err = run_cli(capsys, "report", "/no/such/file.json")
    assert code == 3
    assert err


def test_report_rejects_foreign_json(tmp_path, capsys):
    path = tmp_path / "x.json"
    path.write_text('{"hello": 1}')
    code, _, err = run_cli(capsys, "report", str(path))
    assert code == 2
    assert "report" in err


def test_eval_cap_env_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("ZETASECH_EVAL_CAP", "25")
    code, out, err = run_cli(capsys, "quad", "exp(-pi*v)")
    assert code == 0
    assert "not converged" in err or "converge" in err


def test_eval_cap_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("ZETASECH_EVAL_CAP", "banana")
    assert run_cli(capsys, "eval", "1 + 1")[0] == 2
    monkeypatch.setenv("ZETASECH_EVAL_CAP", "-3")
    assert run_cli(capsys, "eval", "1 + 1")[0] == 2


def test_eval_cap_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("ZETASECH_EVAL_CAP", "25")
    code, out, err = run_cli(
        capsys, "quad", "exp(-pi*v)", "--eval-cap", "2000000"
    )
    assert code == 0
    assert "converge" not in err
