#!/usr/bin/env python3
"""Tests for the identity catalog, its grids and the erratum protocol."""

import pytest

from gammamorphic.errors import DomainError
from gammamorphic.identities import (
    CATALOG,
    IN_SCOPE_FORMULAS,
    PRINTED_FAILURE_FACTOR,
    apply_erratum_protocol,
    catalog_ids,
    parse_ids,
    printed_effective_residual,
    run_identity,
)
from gammamorphic.report import IdentityId, Status, make_report
from gammamorphic.verification_graph import run_suite


def test_every_identity_has_an_entry():
    assert set(CATALOG) == set(IdentityId)
    assert catalog_ids() == list(IdentityId)
    assert set(IN_SCOPE_FORMULAS.values()) <= set(CATALOG)


def test_non_verified_entries_name_a_resolution():
    for entry in CATALOG.values():
        if entry.status is not Status.VERIFIED:
            assert entry.resolution, entry.id


@pytest.mark.parametrize("identity", list(IdentityId))
def test_grid_densities_nest(identity):
    entry = CATALOG[identity]
    small, standard, dense = (entry.params_for(d) for d in ("small", "standard", "dense"))
    assert small and standard and dense
    assert all(p in standard for p in small)
    assert all(p in dense for p in standard)
    if len(dense) > 1:
        assert len(standard) < len(dense)


def test_unknown_density():
    with pytest.raises(DomainError):
        CATALOG[IdentityId.FE_G].params_for("bogus")


def _synthetic(identity, passed, printed=None):
    lhs, rhs = (1.0, 1.0) if passed else (1.0, 2.0)
    return make_report(identity, {"x": 1.0}, lhs, rhs, 1e-10, printed_residual=printed)


def test_erratum_protocol_keeps_verified_status():
    entry = CATALOG[IdentityId.FE_G]
    report = apply_erratum_protocol(entry, _synthetic(IdentityId.FE_G, True))
    assert report.status is Status.VERIFIED
    assert report.notes == ""
    failing = apply_erratum_protocol(entry, _synthetic(IdentityId.FE_G, False))
    assert failing.status is Status.VERIFIED
    assert not failing.passed


def test_erratum_protocol_marks_failing_corrections_unresolved():
    entry = CATALOG[IdentityId.INTEGER_VALUES]
    report = apply_erratum_protocol(entry, _synthetic(IdentityId.INTEGER_VALUES, False))
    assert report.status is Status.UNRESOLVED
    assert report.notes.startswith(entry.resolution)


def test_erratum_protocol_needs_printed_evidence():
    entry = CATALOG[IdentityId.INTEGER_VALUES]
    report = apply_erratum_protocol(entry, _synthetic(IdentityId.INTEGER_VALUES, True))
    assert report.status is Status.UNRESOLVED
    assert "no printed variant" in report.notes


def test_erratum_protocol_small_printed_miss_is_unresolved():
    entry = CATALOG[IdentityId.INTEGER_VALUES]
    close = 0.5 * PRINTED_FAILURE_FACTOR * 1e-10
    report = apply_erratum_protocol(entry, _synthetic(IdentityId.INTEGER_VALUES, True, printed=close))
    assert report.status is Status.UNRESOLVED
    assert "left unresolved" in report.notes


@pytest.mark.parametrize("n", [1, 2])
def test_integer_values_where_the_printed_fraction_holds(n):
    # for n <= 2 both fractions equal 1
    report = run_identity(IdentityId.INTEGER_VALUES, n=n)
    assert report.passed
    assert report.printed_residual < 1e-12
    assert report.status is Status.VERIFIED
    assert "printed form also holds" in report.notes


def test_asymptotic_printed_tail_within_margin_is_unresolved():
    # at x = 60 the sign flip moves ln G by about 2.4e-6, a relative 5e-10
    report = run_identity(IdentityId.ASYMPTOTIC, x=60.0)
    assert report.passed
    assert report.tolerance < printed_effective_residual(report) < PRINTED_FAILURE_FACTOR * report.tolerance
    assert report.status is Status.UNRESOLVED


def test_asymptotic_printed_tail_fails_clearly_at_moderate_x():
    report = run_identity(IdentityId.ASYMPTOTIC, x=11.0)
    assert report.passed
    assert printed_effective_residual(report) > PRINTED_FAILURE_FACTOR * report.tolerance
    assert report.status is Status.ERRATUM_CORRECTED


@pytest.mark.parametrize(
    "row, expected",
    [
        ({"a": 1.5, "x": 0.3, "n": 3}, Status.VERIFIED),
        ({"a": 2.0, "x": 0.5, "n": 4}, Status.VERIFIED),
        ({"a": 1.2, "x": 0.4, "n": 1}, Status.ERRATUM_CORRECTED),
        ({"a": 1.8, "x": 0.6, "n": 2}, Status.ERRATUM_CORRECTED),
    ],
)
def test_roots_of_unity_status_follows_convergence(row, expected):
    report = run_identity(IdentityId.ROOTS_OF_UNITY, row)
    assert report.passed
    assert report.status is expected


def test_s2_crossroute_printed_integrand_diverges():
    report = run_identity(IdentityId.S2_CROSSROUTE, CATALOG[IdentityId.S2_CROSSROUTE].params_for("small")[0])
    assert report.passed
    assert report.printed_residual == float("inf")
    assert report.status is Status.ERRATUM_CORRECTED


def test_run_identity_by_name_and_keywords():
    report = run_identity("FE_G", x=2.5)
    assert report.passed
    assert report.abs_residual < 1e-10
    assert report.status is Status.VERIFIED


def test_integer_values_carry_the_correction():
    report = run_identity(IdentityId.INTEGER_VALUES, {"n": 4})
    assert report.passed
    assert report.status is Status.ERRATUM_CORRECTED
    assert "recursion oracle" in report.notes
    assert "inverted" in report.notes


def test_kinkelin_fe_at_one():
    report = run_identity(IdentityId.KINKELIN_FE, x=1.0)
    assert report.passed
    assert report.abs_residual < 1e-12


def test_tolerance_override():
    report = run_identity(IdentityId.FE_G, {"x": 2.5}, tolerance=-1.0)
    assert not report.passed
    assert report.tolerance == -1.0


def test_run_identity_rejects_bad_input():
    with pytest.raises(DomainError):
        parse_ids("FE_G,nope")
    with pytest.raises(DomainError):
        run_identity(IdentityId.FE_G, y=1.0)
    with pytest.raises(DomainError, match="integer"):
        run_identity(IdentityId.INTEGER_VALUES, n=0)


def test_parse_ids_is_case_insensitive():
    assert parse_ids(" fe_g , KINKELIN_FE,") == [IdentityId.FE_G, IdentityId.KINKELIN_FE]


def test_runs_are_deterministic():
    first = run_identity(IdentityId.DUPLICATION, x=1.3)
    second = run_identity(IdentityId.DUPLICATION, x=1.3)
    assert first.to_json_dict() == second.to_json_dict()


def test_s2_crossroute_dense_grid():
    assert len(CATALOG[IdentityId.S2_CROSSROUTE].params_for("dense")) == 12


@pytest.mark.slow
def test_small_suite_passes():
    result = run_suite(density="small")
    assert result.summary.exit_code == 0, result.summary.failing_verified
    statuses = {}
    for r in result.reports:
        statuses.setdefault(r.id, set()).add(r.status)
    # n = 1 satisfies the printed fraction, n = 5 and 9 do not
    assert statuses[IdentityId.INTEGER_VALUES] == {Status.VERIFIED, Status.ERRATUM_CORRECTED}
    assert statuses[IdentityId.S2_CROSSROUTE] == {Status.ERRATUM_CORRECTED}
    for identity, seen in statuses.items():
        if CATALOG[identity].status is Status.VERIFIED:
            assert seen == {Status.VERIFIED}, identity
