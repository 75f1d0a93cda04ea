import json
from fractions import Fraction

import pytest

from burniat import checks
from burniat.plane import ProjPoint
from burniat.reports import AXIOMS, FAIL, PASS, axiom_record, make_report


@pytest.fixture(scope="module")
def reports():
    return {r.check_id: r for r in checks.run_all(fuzz=200)}


def test_every_check_passes(reports):
    failed = {k: (r.claimed, r.computed) for k, r in reports.items() if not r.passed}
    assert failed == {}


def test_expected_check_ids(reports):
    assert sorted(reports) == [
        "burniat", "c1c2c3", "cremona", "fijki", "invariants", "lines.n5", "miyaoka",
        "ne1e", "pullback", "ramification.R1", "ramification.R2", "ramification.R3", "step1",
    ]


def test_reports_serialise(reports):
    for r in reports.values():
        d = json.loads(r.to_json())
        assert d["kind"] == "check"
        assert d["status"] in (PASS, FAIL)
        assert d["check_id"] == r.check_id


def test_axioms_referenced_exist(reports):
    for r in reports.values():
        assert set(r.axioms_used) <= set(AXIOMS)


def test_make_report_status_is_exact_equality():
    assert make_report("x", "a", {"v": 1}, {"v": 1}).status == PASS
    assert make_report("x", "a", {"v": 1}, {"v": True}).status == PASS  # JSON-level equality
    assert make_report("x", "a", {"v": "20/3"}, {"v": "6.67"}).status == FAIL
    with pytest.raises(KeyError):
        make_report("x", "a", 1, 1, axioms_used=("no-such-fact",))


def test_axiom_record_shape():
    rec = axiom_record("noether")
    assert rec["kind"] == "axiom" and rec["status"] == "ASSUMED"
    assert rec["statement"] == AXIOMS["noether"]


@pytest.mark.parametrize(
    "K2,chi,r,bound",
    [(4, 1, 3, "20/3"), (5, 1, 2, "16/3"), (6, 1, 1, "4"), (3, 1, 3, "8"), (9, 1, 0, "0")],
)
def test_miyaoka_r_max(K2, chi, r, bound):
    got_r, got_bound = checks.miyaoka_r_max(K2, chi)
    assert (got_r, str(got_bound)) == (r, bound)


def test_miyaoka_bound_exact():
    # 25r/12 <= 8 - 4/3 = 20/3: r = 3 fits (25/4 = 75/12 <= 80/12), r = 4 does not
    assert Fraction(25 * 3, 12) <= Fraction(20, 3) < Fraction(25 * 4, 12)


def test_ramification_values(reports):
    got = {k: (r.computed["residual"], r.computed["pairing"]) for k, r in reports.items()
           if k.startswith("ramification")}
    assert got == {
        "ramification.R1": ([-1, 0, 0, 0, 0, 0], -12),
        "ramification.R2": ([-1, 0, 0, 0, 0, 1], -8),
        "ramification.R3": ([0, 0, 0, 0, -1, 0], -4),
    }


def test_lines_check_other_n():
    r = checks.check_lines(4)
    assert r.passed and r.computed["count"] == 10


def test_burniat_custom_points_pass():
    pts = [ProjPoint(p) for p in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (2, 3, 5)]]
    assert checks.check_burniat(pts, fuzz=0).passed


def test_burniat_collinear_points_fail():
    pts = [ProjPoint(p) for p in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 2, 3)]]
    r = checks.check_burniat(pts, fuzz=0)
    assert not r.passed
    assert r.computed["normal_crossing"] == FAIL


def test_ledger_sorted_and_complete():
    ids = [a["axiom_id"] for a in checks.axiom_ledger()]
    assert ids == sorted(AXIOMS)
