import json
from fractions import Fraction as F

import pytest

from calicert import theoremsuite as ts
from calicert.bernstein import bern_expand
from calicert.polycore import parse_poly


def _assert_green(records):
    bad = [r for r in records if not r.ok]
    assert not bad, [(r.id, r.detail) for r in bad]
    for r in records:
        assert r.claim and r.detail


def test_certificates_suite():
    _assert_green(ts.run_certificates())


def test_locus_suite():
    _assert_green(ts.run_locus_lemmas(samples=2000))


def test_identity_suite():
    _assert_green(ts.run_identities())


def test_coass_suite_default_eps():
    _assert_green(ts.run_thm_coass())


def test_coass_suite_small_eps():
    _assert_green(ts.run_thm_coass(F(1, 100)))


def test_cayley_suite():
    _assert_green(ts.run_thm_cayley())


def test_appendix_suite():
    _assert_green(ts.run_appendix_claim())


def test_eps_validation():
    with pytest.raises(ValueError):
        ts.run_thm_coass(F(1))
    with pytest.raises(ValueError):
        ts.run_thm_cayley(F(0))


def test_negative_control_quadratic_degree2():
    cert = bern_expand(parse_poly("5*t^2 - 3*t + 1"), 0, 1, 2)
    assert cert.verdict == "inconclusive"


def test_failed_certificate_reports_offending_coefficient():
    record = ts._certify_record(
        "control", "sign-changing polynomial cannot certify", parse_poly("t"), -1, 1, 4
    )
    assert record.status == "failed"
    assert "coefficient" in record.detail


def test_wrong_stated_degree_fails_record():
    record = ts._certify_record(
        "control", "degree understated on purpose", parse_poly("5*t^2 - 3*t + 1"), 0, 1, 2
    )
    assert record.status == "failed"
    assert "degree 3" in record.detail  # the search found 3, the claim said 2


def test_assumption_nodes_present():
    ids = {r.id: r.status for r in ts.run_thm_coass()}
    assert ids.get("coass_analytic_endgame") == "assumed"
    records = ts.run_thm_cayley()
    assert any(r.status == "assumed" for r in records)
    # assumption nodes do not fail the suite
    assert all(r.ok for r in records)


def test_region_membership_is_reported_not_claimed():
    # (1,1,1,1) has pair sum 6 > 0: off the theorem's region and off CS0
    from calicert.normalform import classify

    assert classify([1.0, 1.0, 1.0, 1.0]) == "CS+"


def test_records_reproducible():
    a = ts.run_appendix_claim()
    b = ts.run_appendix_claim()
    strip = lambda recs: [(r.id, r.claim, r.status, r.detail) for r in recs]
    assert strip(a) == strip(b)
    a = ts.run_thm_coass()
    b = ts.run_thm_coass()
    assert strip(a) == strip(b)


def test_json_report(tmp_path):
    path = tmp_path / "report.json"
    records = ts.run_appendix_claim()
    ts.records_to_json(records, str(path))
    data = json.loads(path.read_text())
    assert len(data) == len(records)
    assert set(data[0]) == {"id", "claim", "status", "detail", "wall_time_ms"}


def test_corpus_report_schema(tmp_path):
    rows = ts.corpus_report(str(tmp_path / "corpus.json"))
    assert all(
        set(r) == {"id", "degree_claimed", "degree_found", "verdict", "margin_min_coeff"}
        for r in rows
    )
    assert all(r["degree_found"] == r["degree_claimed"] for r in rows)


def test_tau_enclosure_and_cone_exclusion():
    tau = ts.tau_algebraic()
    tau.refine(F(1, 10 ** 6))
    assert 4 < float(tau.lo) < float(tau.hi) < 4.5
    assert F(5) > tau.hi


def test_stated_certificate_degrees_are_minimal():
    """Degrees found by the search equal the stated ones, as equalities."""
    for ident, factory, a, b, degree, verdict in ts.CORPUS:
        from calicert.bernstein import bern_certify

        found = bern_certify(factory(), a, b, max_m=degree + 4)
        assert found.m == degree, ident
        assert found.verdict == verdict, ident
