"""Verification semantics: statuses, determinism, and report formats."""

import dataclasses
import json

import pytest

from zetasech.catalog import builtin_identities, get_identity, parse_catalog
from zetasech.verifier import (
    Status,
    from_json,
    run_suite,
    to_csv,
    to_json,
    to_markdown,
    verify_case,
)

PROBE = """[identity {rid}]
group = A
kind = {kind}
tol = {tol}
paper = probe
lhs = {lhs}
rhs = {rhs}
"""


def probe(rid, lhs, rhs, kind="NUMERIC", tol="TIGHT", extra=""):
    text = PROBE.format(rid=rid, kind=kind, tol=tol, lhs=lhs, rhs=rhs) + extra
    return parse_catalog(text)[0]


def strip_ms(suite):
    return [dataclasses.replace(r, ms=0.0) for r in suite.results]


def test_pass_fields_are_coherent():
    res = verify_case(get_identity("SinId"), {"x": 1.0})
    assert res.status is Status.PASS
    assert res.residual <= res.allowed
    assert res.err_budget == 0.0
    assert res.params_text() == "x=1.0"


def test_relative_scale_uses_both_sides():
    res = verify_case(probe("Big", "10^6 + 1/100", "10^6"), {})
    # residual 0.01 against scale 1e6 sits inside the 1e-10 relative band? no:
    # 0.01 > 1e-10 * 1e6 = 1e-4, so this must fail
    assert res.status is Status.FAIL


def test_zero_rhs_switches_to_absolute_scale():
    res = verify_case(probe("TinyZero", "1/10^12", "0"), {})
    assert res.status is Status.PASS
    res = verify_case(probe("FatZero", "1/10^3", "0"), {})
    assert res.status is Status.FAIL


def test_near_machine_noise_passes():
    res = verify_case(probe("LnExp", "exp(ln(10))", "10"), {})
    assert res.status is Status.PASS
    assert res.residual > 0.0


def test_tol_override_tightens():
    res = verify_case(probe("LnExp", "exp(ln(10))", "10"), {}, tol_override=1e-17)
    assert res.status is Status.FAIL


def test_exact_pass_and_fail():
    ok = verify_case(
        probe("ExactOk", "1/3 - 1/4", "1/12", kind="EXACT", tol="EXACT"), {}
    )
    assert ok.status is Status.PASS
    assert ok.residual == 0.0
    bad = verify_case(
        probe("ExactBad", "1/3", "1/4", kind="EXACT", tol="EXACT"), {}
    )
    assert bad.status is Status.FAIL
    assert "exact residual" in bad.message


def test_domain_error_is_reported_not_raised():
    res = verify_case(probe("Pole", "hzeta(1, 1)", "0"), {})
    assert res.status is Status.ERROR
    assert res.message


def test_negative_control_confirmed():
    res = verify_case(get_identity("Eq3p1Ctl"), next(iter(get_identity("Eq3p1Ctl").case_params())))
    assert res.status is Status.EXPECTED_FAIL_CONFIRMED


def test_negative_control_violated_when_sides_agree():
    rec = probe("SneakyCtl", "2 + 2", "4", kind="NEGATIVE_CONTROL", tol="MED")
    res = verify_case(rec, {})
    assert res.status is Status.EXPECTED_FAIL_VIOLATED


def test_suite_ok_logic():
    good = run_suite([get_identity("SinId"), get_identity("Eq3p1Ctl")])
    assert good.ok
    bad = run_suite([probe("SneakyCtl", "1", "1", kind="NEGATIVE_CONTROL", tol="MED")])
    assert not bad.ok
    assert bad.counts()["EXPECTED_FAIL_VIOLATED"] == 1


def test_suite_counts_sum_to_cases():
    suite = run_suite([get_identity("Theorem4a"), get_identity("EuId")])
    assert sum(suite.counts().values()) == len(suite.results)


def test_run_suite_is_deterministic_modulo_timing():
    records = [get_identity(rid) for rid in ("SinId", "CodId", "EuId", "T1s0")]
    first = run_suite(records)
    second = run_suite(records)
    assert strip_ms(first) == strip_ms(second)
    assert to_csv(first) == to_csv(second)
    assert to_json(first, include_ms=False) == to_json(second, include_ms=False)


def test_parallel_run_matches_serial():
    records = [get_identity(rid) for rid in ("SinId", "CodId", "EuId", "T1s0")]
    serial = run_suite(records, jobs=1)
    threaded = run_suite(records, jobs=3)
    assert strip_ms(serial) == strip_ms(threaded)


def test_tol_overrides_by_class():
    records = [get_identity("SinId")]
    relaxed = run_suite(records, tol_overrides={"TIGHT": 1e-6})
    assert relaxed.ok
    brutal = run_suite([probe("LnExp", "exp(ln(10))", "10")], tol_overrides={"TIGHT": 1e-17})
    assert not brutal.ok


def test_json_round_trip_reproduces_results():
    suite = run_suite([get_identity("SinId"), get_identity("EuId")])
    back = from_json(to_json(suite))
    assert [dataclasses.replace(r, ms=0.0) for r in back.results] == strip_ms(suite)
    assert back.counts() == suite.counts()


def test_json_without_ms_has_no_timings():
    suite = run_suite([get_identity("SinId")])
    text = to_json(suite, include_ms=False)
    doc = json.loads(text)
    assert "elapsed_ms" not in doc
    assert all("ms" not in case for case in doc["cases"])
    assert from_json(text).ok


def test_from_json_rejects_foreign_documents():
    with pytest.raises(ValueError):
        from_json('{"hello": "world"}')
    with pytest.raises(ValueError):
        from_json("[]")


def test_csv_shape():
    suite = run_suite([get_identity("SinId")])
    lines = to_csv(suite).splitlines()
    assert lines[0].startswith("identity,group,kind,tol,params,status")
    assert len(lines) == 1 + len(suite.results)
    assert lines[1].startswith("SinId,A,NUMERIC,TIGHT,")


def test_markdown_shape():
    suite = run_suite([get_identity("SinId")])
    text = to_markdown(suite)
    assert text.splitlines()[0].startswith("#")
    assert suite.summary() in text
    assert "| identity |" in text


def test_full_builtin_suite_is_green():
    suite = run_suite(builtin_identities())
    assert suite.ok
    counts = suite.counts()
    assert counts["EXPECTED_FAIL_CONFIRMED"] == 4
    assert counts["FAIL"] == 0 and counts["ERROR"] == 0
    assert sum(counts.values()) == 994
