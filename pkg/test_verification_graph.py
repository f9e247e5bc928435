#!/usr/bin/env python3
"""
Tests for the verification workflow.

Mirrors the node-by-node checks of the workflow: selection, grid runs,
summary and the sequential fallback used when langgraph is absent.
"""

import pytest

from gammamorphic.errors import DomainError
from gammamorphic.report import IdentityId, Status, make_report
from gammamorphic.verification_graph import VerificationWorkflow, run_suite, summarize_reports

REPORT_KEYS = {"id", "params", "lhs", "rhs", "abs_residual", "rel_residual", "tolerance", "pass", "status", "notes"}


def test_filtered_run_is_in_canonical_order():
    result = run_suite(["KINKELIN_FE", "FE_G"], "small")
    ids = [r.id for r in result.reports]
    assert set(ids) == {IdentityId.FE_G, IdentityId.KINKELIN_FE}
    assert ids.index(IdentityId.KINKELIN_FE) > max(i for i, x in enumerate(ids) if x is IdentityId.FE_G)
    assert result.summary.exit_code == 0
    assert result.summary.total == len(result.reports)


def test_report_serialization_keys():
    result = run_suite([IdentityId.GLAISHER_DEF], "small")
    assert len(result.reports) == 1
    payload = result.to_json_dict()
    assert set(payload) == {"reports", "summary"}
    assert set(payload["reports"][0]) == REPORT_KEYS


@pytest.mark.slow
def test_s2_crossroute_dense():
    result = run_suite(["S2_CROSSROUTE"], "dense")
    assert len(result.reports) == 12
    assert all(r.passed for r in result.reports)


def test_tolerance_override_fails_a_verified_identity():
    result = run_suite(["FE_G"], "small", tolerances={"FE_G": -1.0})
    assert result.summary.exit_code == 1
    assert result.summary.failing_verified == ["FE_G"]
    assert result.summary.passed == 0


def _report(identity, passed, status=Status.VERIFIED):
    rhs = 1.0 if passed else 2.0
    return make_report(identity, {"x": 1.0}, 1.0, rhs, 1e-10, status=status)


def test_summary_exit_code():
    failing_verified = summarize_reports([_report(IdentityId.FE_G, True), _report(IdentityId.DUPLICATION, False)], "small")
    assert failing_verified.exit_code == 1
    assert failing_verified.failing_verified == ["DUPLICATION"]
    assert failing_verified.by_status["verified"] == 2

    unresolved = summarize_reports([_report(IdentityId.REFLECTION, False, Status.UNRESOLVED)], "small")
    assert unresolved.exit_code == 0
    assert unresolved.failed == 1
    assert unresolved.by_status["unresolved"] == 1


def test_bad_input():
    with pytest.raises(DomainError):
        run_suite(["NOPE"], "small")
    with pytest.raises(DomainError):
        run_suite(["FE_G"], "huge")
    with pytest.raises(DomainError):
        VerificationWorkflow(0)


def test_sequential_fallback_matches_graph():
    state = {"density": "small", "only": [IdentityId.BERNOULLI_DIFFERENCE], "tolerances": {}}
    workflow = VerificationWorkflow(1)
    via_invoke = workflow.invoke(dict(state))
    sequential = workflow._run_sequential(dict(state))
    assert [r.to_json_dict() for r in via_invoke["reports"]] == [r.to_json_dict() for r in sequential["reports"]]
    assert via_invoke["summary"] == sequential["summary"]


def test_threaded_run_keeps_order():
    one = run_suite(["BERNOULLI_RAABE", "FE_G"], "standard", workers=1)
    two = run_suite(["BERNOULLI_RAABE", "FE_G"], "standard", workers=2)
    assert [r.to_json_dict() for r in one.reports] == [r.to_json_dict() for r in two.reports]
