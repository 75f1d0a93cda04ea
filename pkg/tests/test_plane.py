import random
from dataclasses import replace
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burniat.errors import InvalidInputError
from burniat.lattice import Lattice, canonical
from burniat.plane import (
    BRANCH_GROUPS,
    DEFAULT_POINTS,
    LINE_SUPPORT,
    BurniatArrangement,
    ProjLine,
    ProjPoint,
    branch_class,
    class_of_line,
    concurrency_witnesses,
    det3,
    expected_incidence,
    fuzz_normal_crossing,
    general_position,
    incident,
    join,
    meet,
    normal_crossing,
    parse_points,
    random_points,
    read_points,
    recheck_witness,
)

L5 = Lattice(5)
DEFAULT = BurniatArrangement.default()


def _det_oracle(p, q, r):
    (a, b, c), (d, e, f), (g, h, i) = p, q, r
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def test_points_normalised():
    assert ProjPoint((2, 4, 6)) == ProjPoint((1, 2, 3))
    assert ProjPoint((0, -3, 3)).coords == (0, 1, -1)
    assert ProjPoint((Fraction(1, 2), 1, 0)).ints == (1, 2, 0)


def test_zero_point_rejected():
    with pytest.raises(InvalidInputError):
        ProjPoint((0, 0, 0))
    with pytest.raises(InvalidInputError):
        ProjPoint((1, 2))


def test_join_and_meet():
    p, q = ProjPoint((1, 0, 0)), ProjPoint((0, 1, 0))
    line = join(p, q)
    assert line == ProjLine((0, 0, 1))
    assert incident(p, line) and incident(q, line)
    assert meet(line, ProjLine((1, 0, 0))) == q
    with pytest.raises(InvalidInputError):
        join(p, p)
    with pytest.raises(InvalidInputError):
        meet(line, line)


@settings(max_examples=300)
@given(st.lists(st.tuples(*[st.integers(-20, 20)] * 3), min_size=3, max_size=3))
def test_det_matches_cofactor_expansion(vs):
    assert det3(*vs) == _det_oracle(*vs)


def test_general_position_examples():
    pts = [ProjPoint(p) for p in DEFAULT_POINTS]
    assert general_position(pts)
    collinear = pts[:4] + [ProjPoint((1, 1, 0))]
    assert not general_position(collinear)
    with pytest.raises(InvalidInputError):
        general_position(pts[:4])
    with pytest.raises(InvalidInputError):
        general_position(pts[:4] + [pts[0]])


def test_incidence_of_default_arrangement():
    assert {i: DEFAULT.lines_through(i) for i in range(1, 6)} == expected_incidence()
    assert [len(expected_incidence()[i]) for i in range(1, 6)] == [4, 4, 4, 3, 3]


def test_line_classes():
    assert class_of_line(DEFAULT, "g1") == L5.l() - L5.e(1) - L5.e(4)
    assert class_of_line(DEFAULT, "e'1") == L5.l() - L5.e(2) - L5.e(3)
    with pytest.raises(KeyError):
        class_of_line(DEFAULT, "delta")


def test_branch_classes_sum_to_minus_three_k():
    total = sum((branch_class(DEFAULT, i) for i in BRANCH_GROUPS), L5.zero())
    assert total == -3 * canonical(L5)
    assert branch_class(DEFAULT, 1) == L5.cls((3, 1, -3, -1, -1, -1))


def test_default_is_normal_crossing():
    r = normal_crossing(DEFAULT)
    assert r.passed
    assert r.details["triples_checked"] == 84


def test_any_three_lines_share_a_defining_point_or_are_generic():
    # every concurrency among the nine lines is at one of p_1..p_5
    for a, b, c in combinations(LINE_SUPPORT, 3):
        la, lb, lc = (DEFAULT.lines[x] for x in (a, b, c))
        if det3(la.ints, lb.ints, lc.ints) == 0:
            assert meet(la, lb) in DEFAULT.points


def test_concurrency_witness_on_custom_lines():
    lines = {
        "x": ProjLine((1, 0, -1)),
        "y": ProjLine((0, 1, -1)),
        "z": ProjLine((1, -1, 0)),
        "w": ProjLine((0, 0, 1)),
    }
    ws = concurrency_witnesses(lines, allowed=[])
    assert len(ws) == 1
    assert ws[0].lines == ("x", "y", "z")
    assert ws[0].point == ProjPoint((1, 1, 1))
    assert recheck_witness(lines, ws[0])
    assert concurrency_witnesses(lines, allowed=[ProjPoint((1, 1, 1))]) == []


def test_doctored_arrangement_fails_with_witness():
    # g2 (p2 p4) and h3 (p3 p5) meet off the points; swing g1 through p1 and that meet
    target = meet(DEFAULT.lines["g2"], DEFAULT.lines["h3"])
    assert target not in DEFAULT.points
    lines = dict(DEFAULT.lines)
    lines["g1"] = join(DEFAULT.points[0], target)
    doctored = replace(DEFAULT, lines=lines)
    r = normal_crossing(doctored)
    assert not r.passed
    ws = r.computed["concurrencies"]
    assert {"lines": ["g1", "g2", "h3"], "point": str(target)} in ws


def test_repeated_line_is_a_witness():
    lines = dict(DEFAULT.lines)
    lines["g2"] = lines["g1"]
    ws = concurrency_witnesses(lines, DEFAULT.points)
    assert any(w.point is None for w in ws)
    assert all(recheck_witness(lines, w) for w in ws)


def test_collinear_points_fail_cleanly():
    pts = list(DEFAULT_POINTS[:4]) + [(1, 1, 0)]
    r = normal_crossing(BurniatArrangement.from_points(pts))
    assert not r.passed
    assert r.details["reason"] == "three of the points are collinear"


def test_parse_points():
    text = "# five points\n1 0 0\n0 1 0\n0 0 1\n1 1 1  # unit\n1/2 1 3/2\n"
    pts = parse_points(text)
    assert pts[4] == ProjPoint((1, 2, 3))


@pytest.mark.parametrize(
    "text",
    ["1 0 0\n0 1 0\n", "1 0\n" * 5, "a b c\n" * 5, "1 0 0\n0 1 0\n0 0 1\n1 1 1\n0 0 0\n", "1/0 1 1\n" * 5],
)
def test_parse_errors(text):
    with pytest.raises(InvalidInputError):
        parse_points(text)


def test_read_points(tmp_path):
    f = tmp_path / "pts.txt"
    f.write_text("\n".join(" ".join(map(str, p)) for p in DEFAULT_POINTS))
    assert read_points(f) == [ProjPoint(p) for p in DEFAULT_POINTS]
    with pytest.raises(InvalidInputError):
        read_points(tmp_path / "missing.txt")


def test_random_points_nonzero():
    rng = random.Random(3)
    for _ in range(50):
        assert all(any(p) for p in random_points(rng, 2))


def test_fuzz_thousand_configurations():
    stats = fuzz_normal_crossing(seed=0, count=1000)
    assert stats.configs == 1000
    assert stats.pass_rate >= Fraction(95, 100)
    assert stats.failed == stats.witnesses_rechecked


def test_fuzz_is_seeded():
    a = fuzz_normal_crossing(seed=5, count=50)
    b = fuzz_normal_crossing(seed=5, count=50)
    assert (a.passed, a.degenerate_skipped) == (b.passed, b.degenerate_skipped)
