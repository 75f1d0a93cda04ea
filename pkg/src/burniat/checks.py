"""Replay of every lattice-level computation behind the K^2 = 4 bidouble-plane classification.

Each ``check_*`` function recomputes one family of numbers from scratch and
returns a :class:`~burniat.reports.CheckReport` (or a list of them) whose
``claimed`` side is written out literally and whose ``computed`` side comes
from the library.  Facts that are geometric rather than numerical are listed
in ``axioms_used`` by id; see :data:`burniat.reports.AXIOMS`.
"""
from __future__ import annotations

from fractions import Fraction
from math import floor
from typing import Sequence

from burniat.cover import (
    SClass,
    bidouble_invariants,
    bidouble_solve,
    cover_sum,
    double_cover,
    pg_lower_via_pullback,
    sclass_chi,
    sclass_genus,
)
from burniat.curves import (
    enumerate_conic_classes,
    enumerate_lines,
    format_line_table,
    intersection_table,
    line_by_name,
)
from burniat.errors import PreconditionError, SearchFailureError
from burniat.lattice import DivisorClass, Lattice, canonical, intersect
from burniat.linsys import h0, is_effective, ne1e_summary
from burniat.plane import (
    BurniatArrangement,
    ProjPoint,
    branch_class,
    fuzz_normal_crossing,
    normal_crossing,
)
from burniat.reports import AXIOMS, CheckReport, axiom_record, make_report
from burniat.weyl import cremona_witness, orbit, root_reflections

DP4 = Lattice(5)

# classical counts of (-1)-classes on P^2 blown up at n general points
EXPECTED_LINE_COUNT = {0: 0, 1: 1, 2: 3, 3: 6, 4: 10, 5: 16, 6: 27, 7: 56, 8: 240}

# the sixteen lines by name, written out from their defining incidences
LINE_TABLE = {
    "e1": (0, 1, 0, 0, 0, 0), "e2": (0, 0, 1, 0, 0, 0), "e3": (0, 0, 0, 1, 0, 0),
    "e4": (0, 0, 0, 0, 1, 0), "e5": (0, 0, 0, 0, 0, 1),
    "e'1": (1, 0, -1, -1, 0, 0), "e'2": (1, -1, 0, -1, 0, 0), "e'3": (1, -1, -1, 0, 0, 0),
    "g1": (1, -1, 0, 0, -1, 0), "g2": (1, 0, -1, 0, -1, 0), "g3": (1, 0, 0, -1, -1, 0),
    "h1": (1, -1, 0, 0, 0, -1), "h2": (1, 0, -1, 0, 0, -1), "h3": (1, 0, 0, -1, 0, -1),
    "gamma": (1, 0, 0, 0, -1, -1),
    "delta": (2, -1, -1, -1, -1, -1),
}

BURNIAT_BRANCH = {
    1: (3, 1, -3, -1, -1, -1),
    2: (3, -1, 1, -3, -1, -1),
    3: (3, -3, -1, 1, -1, -1),
}


def _l() -> DivisorClass:
    return DP4.l()


def _e(i: int) -> DivisorClass:
    return DP4.e(i)


def _f(i: int) -> DivisorClass:
    return DP4.l() - DP4.e(i)


def K_S() -> SClass:
    return SClass.canonical(DP4)


def P(d: DivisorClass) -> SClass:
    return SClass.pullback(d)


def H(name: str) -> SClass:
    """Reduced curve under a doubled line: ``phi^*(line)/2``."""
    return SClass.half_pullback(line_by_name(name))


def eta() -> SClass:
    return K_S() - cover_sum([H(f"e{i}") + H(f"e'{i}") for i in (1, 2, 3)])


# -- lines -----------------------------------------------------------------

def check_lines(n: int = 5) -> CheckReport:
    lat = Lattice(n)
    lines = enumerate_lines(lat)
    table = intersection_table(lines)
    computed = {"count": len(lines)}
    claimed = {"count": EXPECTED_LINE_COUNT[n]}
    if n == 5:
        claimed["names"] = {k: list(v) for k, v in sorted(LINE_TABLE.items())}
        computed["names"] = {x.name: list(x.cls.coeffs) for x in sorted(lines, key=lambda x: x.name)}
        claimed["meets_per_line"] = [5]
        computed["meets_per_line"] = sorted({sum(1 for v in row if v == 1) for row in table})
        claimed["table_values"] = [-1, 0, 1]
        computed["table_values"] = sorted({v for row in table for v in row})
    return make_report(
        f"lines.n{n}",
        "a quartic del Pezzo surface contains exactly sixteen (-1)-curves:"
        " e_i, e'_j, g_j, h_j, gamma, delta",
        claimed,
        computed,
        details={"table": format_line_table(lines)},
    )


# -- Miyaoka bound ---------------------------------------------------------

def miyaoka_r_max(K2: int, chi: int | None = None, c2: int | None = None) -> tuple[int, Fraction]:
    """Largest ``r >= 0`` with ``25 r / 12 <= c2 - K2/3``; ``c2`` from Noether if not given."""
    if c2 is None:
        if chi is None:
            raise ValueError("need chi or c2")
        c2 = 12 * chi - K2
    bound = Fraction(c2) - Fraction(K2, 3)
    return max(0, floor(Fraction(12, 25) * bound)), bound


def check_miyaoka(K2: int = 4, chi: int = 1) -> CheckReport:
    c2 = 12 * chi - K2
    r_max, bound = miyaoka_r_max(K2, c2=c2)
    return make_report(
        "miyaoka",
        "25/12 r <= c_2(S) - K_S^2/3 = 20/3, so at most three disjoint (-4)-curves",
        {"c2": 8, "bound": "20/3", "r_max": 3},
        {"c2": c2, "bound": str(bound), "r_max": r_max},
        axioms_used=("noether", "miyaoka-bound"),
    )


# -- ramification residuals -------------------------------------------------

ALL_BUT_DELTA = tuple(n for n in LINE_TABLE if n != "delta")

RAMIFICATION_CASES = (
    ("R1", ALL_BUT_DELTA, (-1, 0, 0, 0, 0, 0), -12),
    ("R2", tuple(n for n in ALL_BUT_DELTA if n != "e5"), (-1, 0, 0, 0, 0, 1), -8),
    ("R3", tuple(n for n in ALL_BUT_DELTA if n not in ("e5", "gamma")), (0, 0, 0, 0, -1, 0), -4),
)


def ramification_residual(doubled: Sequence[str]) -> SClass:
    """``2(R - sum E_C)`` over the doubled lines ``C``, with ``R = 3 K_S``."""
    two_r = 6 * K_S()
    return two_r - cover_sum([2 * H(name) for name in doubled])


def check_ramification_residuals() -> list[CheckReport]:
    reports = []
    two_k = 2 * K_S()
    for case, doubled, expected, pairing in RAMIFICATION_CASES:
        residual = ramification_residual(doubled)
        value = residual.dot(two_k)
        reports.append(make_report(
            f"ramification.{case}",
            "R = K_S + phi^*(-K_Sigma) = 3K_S; the residual 2R_i pairs negatively with 2K_S",
            {"residual": list(expected), "pairing": pairing, "pairing_negative": True},
            {"residual": list(residual.base_class().coeffs),
             "pairing": value, "pairing_negative": value < 0},
            axioms_used=("hurwitz", "bicanonical-pullback", "finite-ample", "line-pullback-dichotomy"),
            details={"doubled": list(doubled)},
        ))
    return reports


# -- three disjoint (-4)-curves ---------------------------------------------

def check_c1c2c3() -> CheckReport:
    ks = K_S()
    E2, E4, E5 = P(_e(2)), P(_e(4)), P(_e(5))
    Ep2, F2 = H("e'2"), P(_f(2))
    L = ks - Ep2 - F2 + E4 + E5
    pg = pg_lower_via_pullback(_l(), [Ep2])
    inv = double_cover(1, ks, L, pg)
    computed = {
        "2K_S = 2E'2 + 2F2 + E2 - E4 - E5": 2 * ks == 2 * Ep2 + 2 * F2 + E2 - E4 - E5,
        "2L = E2 + E4 + E5": 2 * L == E2 + E4 + E5,
        "K_S + L = phi^*(l) + E'2": ks + L == P(_l()) + Ep2,
        "K2_Y": inv.K2,
        "chi_Y": inv.chi,
        "pg_lower": inv.pg_lower,
        "q_lower": inv.q_lower,
        "K2_Y < 16(q-1)": inv.K2 < 16 * (inv.q_lower - 1),
    }
    claimed = {
        "2K_S = 2E'2 + 2F2 + E2 - E4 - E5": True,
        "2L = E2 + E4 + E5": True,
        "K_S + L = phi^*(l) + E'2": True,
        "K2_Y": 14,
        "chi_Y": 2,
        "pg_lower": 3,
        "q_lower": 2,
        "K2_Y < 16(q-1)": True,
    }
    return make_report(
        "c1c2c3",
        "K_Y^2 = 2(2K_S - E'2 - F2 + E4 + E5)^2 = 14, chi(O_Y) = 2, p_g(Y) >= 3, q(Y) >= 2,"
        " contradicting K_Y^2 >= 16(q(Y) - 1)",
        claimed,
        computed,
        axioms_used=("double-cover-formulas", "bicanonical-pullback", "kq-inequality",
                     "line-pullback-dichotomy", "miyaoka-bound", "cremona-realizable",
                     "dp-effective-cone"),
    )


# -- Riemann-Roch values on S ----------------------------------------------

def check_invariants() -> CheckReport:
    ks = K_S()
    E1, E4, E5 = H("e1"), P(_e(4)), P(_e(5))
    Ep1, F1 = H("e'1"), P(_f(1))
    et = eta()
    eta1 = SClass.torsion_class(DP4, 1)
    big = 2 * ks + E4 + E5
    cubic = 3 * _l() - _e(1) - _e(2) - _e(3)
    computed = {
        "2eta = -E4 - E5": 2 * et == -(E4 + E5),
        "chi(K_S + eta + eta1)": sclass_chi(ks + et + eta1),
        "h0(2K_S + E4 + E5)": sclass_chi(big),
        "(2K_S + E4 + E5).(E4 + E5)": big.dot(E4 + E5),
        "h0(2K_S)": h0(-canonical(DP4)).value,
        "chi(2K_S)": sclass_chi(2 * ks),
        "h0(Sigma, 3l - e1 - e2 - e3)": h0(cubic).value,
        "2K_S + E4 + E5 = phi^*(3l - e1 - e2 - e3)": big == P(cubic),
        "K_S + eta + eta1 + F1 ~num 2K_S - E1 - E'1": (ks + et + eta1 + F1).numerically_equal(2 * ks - E1 - Ep1),
        "K_S - eta + eta1 ~num F1 + E'1 + E1": (ks - et + eta1).numerically_equal(F1 + Ep1 + E1),
        "h0(Sigma, f_i)": sorted({h0(_f(i)).value for i in (1, 2, 3)}),
    }
    claimed = {
        "2eta = -E4 - E5": True,
        "chi(K_S + eta + eta1)": -1,
        "h0(2K_S + E4 + E5)": 7,
        "(2K_S + E4 + E5).(E4 + E5)": 0,
        "h0(2K_S)": 5,
        "chi(2K_S)": 5,
        "h0(Sigma, 3l - e1 - e2 - e3)": 7,
        "2K_S + E4 + E5 = phi^*(3l - e1 - e2 - e3)": True,
        "K_S + eta + eta1 + F1 ~num 2K_S - E1 - E'1": True,
        "K_S - eta + eta1 ~num F1 + E'1 + E1": True,
        "h0(Sigma, f_i)": [2],
    }
    return make_report(
        "invariants",
        "chi(O_S(K_S + eta + eta_i)) = -1, h^0(2K_S + E4 + E5) = 7, h^0(2K_S) = 5",
        claimed,
        computed,
        axioms_used=("bicanonical-pullback", "kodaira-vanishing", "vanishing-2K+E4+E5",
                     "eta-nontrivial", "dp-effective-cone", "moving-part-descent"),
    )


def check_fijki() -> CheckReport:
    ks = K_S()
    E1, E4, E5 = H("e1"), P(_e(4)), P(_e(5))
    Ep2, Ep3, F1 = H("e'2"), H("e'3"), P(_f(1))
    fixed = 2 * E1 + Ep3 + Ep2
    L = ks - fixed + E4 + E5
    pg = pg_lower_via_pullback(_l(), [Ep3, Ep2])
    inv = double_cover(1, ks, L, pg)
    computed = {
        "2K_S = F1 + 2(2E1 + E'3 + E'2) - E4 - E5": 2 * ks == F1 + 2 * fixed - E4 - E5,
        "2L = F1 + E4 + E5": 2 * L == F1 + E4 + E5,
        "K_S + L = phi^*(l) + E'3 + E'2": ks + L == P(_l()) + Ep3 + Ep2,
        "chi_Y": inv.chi,
        "pg_lower": inv.pg_lower,
        "q_lower": inv.q_lower,
    }
    claimed = {
        "2K_S = F1 + 2(2E1 + E'3 + E'2) - E4 - E5": True,
        "2L = F1 + E4 + E5": True,
        "K_S + L = phi^*(l) + E'3 + E'2": True,
        "chi_Y": 3,
        "pg_lower": 3,
        "q_lower": 1,
    }
    return make_report(
        "fijki",
        "the double cover branched on F1 + E4 + E5 has chi(O_Y) = 3 and p_g(Y) >= 3, so q(Y) >= 1",
        claimed,
        computed,
        axioms_used=("double-cover-formulas", "bicanonical-pullback", "dp-effective-cone",
                     "albanese-curve", "eta-restrictions"),
        details={"K2_Y": inv.K2},
    )


def check_step1() -> CheckReport:
    ks = K_S()
    E4, E5, F3 = P(_e(4)), P(_e(5)), P(_f(3))
    M = SClass.half_pullback(_f(3))  # reduced support of the extra double fibre 2M = F3
    r0 = cover_sum([H(f"e{i}") + H(f"e'{i}") for i in (1, 2, 3)] + [H(n) for n in ("g1", "g2", "h1", "h2")] + [M])
    residual = 2 * (3 * ks - r0)
    computed = {
        "K_S.F3": ks.dot(F3),
        "K_S.E4": ks.dot(E4),
        "K_S.E5": ks.dot(E5),
        "E4^2": E4.dot(E4),
        "genus(E4)": sclass_genus(E4),
        "2(R - R0) = F3 - E4 - E5": residual == F3 - E4 - E5,
        "(F3 - E4 - E5).K_S": (F3 - E4 - E5).dot(ks),
    }
    claimed = {
        "K_S.F3": 4,
        "K_S.E4": 2,
        "K_S.E5": 2,
        "E4^2": -4,
        "genus(E4)": 0,
        "2(R - R0) = F3 - E4 - E5": True,
        "(F3 - E4 - E5).K_S": 0,
    }
    return make_report(
        "step1",
        "0 < E K_S = (F3 - E4 - E5) K_S = 0 with K_S F3 = 4",
        claimed,
        computed,
        axioms_used=("hurwitz", "bicanonical-pullback", "finite-ample", "step1-double-fibres"),
    )


# -- pullback lattice --------------------------------------------------------

def check_pullback() -> CheckReport:
    ks = K_S()
    basis = DP4.basis()
    scaling = all(P(a).dot(P(b)) == 4 * intersect(a, b) for a in basis for b in basis)
    c2 = 12 * 1 - ks.dot(ks)
    fibres = [P(_f(i)) for i in range(1, 6)]
    computed = {
        "K_S^2": ks.dot(ks),
        "c2": c2,
        "b2(S)": c2 - 2,  # q = 0
        "rank Pic(Sigma)": DP4.rank,
        "phi^*a.phi^*b = 4ab": scaling,
        "F_i^2": [F.dot(F) for F in fibres],
        "K_S.F_i": [ks.dot(F) for F in fibres],
        "genus(F_i)": [sclass_genus(F) for F in fibres],
    }
    claimed = {
        "K_S^2": 4,
        "c2": 8,
        "b2(S)": 6,
        "rank Pic(Sigma)": 6,
        "phi^*a.phi^*b = 4ab": True,
        "F_i^2": [0] * 5,
        "K_S.F_i": [4] * 5,
        "genus(F_i)": [3] * 5,
    }
    return make_report(
        "pullback",
        "chi_top(S) = 8 gives h^2(S) = 6 = rank Pic(Sigma); phi^* scales the form by 4; |F_i| is a genus 3 pencil",
        claimed,
        computed,
        axioms_used=("noether", "bicanonical-pullback", "genus3-fibration", "finite-ample"),
    )


# -- Burniat data -------------------------------------------------------------

def _cycle(d: DivisorClass) -> DivisorClass:
    """Relabel e1 -> e2 -> e3 -> e1."""
    c = d.coeffs
    return DivisorClass((c[0], c[3], c[1], c[2], c[4], c[5]), d.lattice)


def check_burniat(points: Sequence[ProjPoint] | None = None, seed: int = 0, fuzz: int = 1000) -> CheckReport:
    arr = BurniatArrangement.default() if points is None else BurniatArrangement.from_points(points)
    nc = normal_crossing(arr)
    B = {i: DP4.cls(v) for i, v in BURNIAT_BRANCH.items()}
    from_lines = {i: branch_class(arr, i) for i in (1, 2, 3)} if nc.passed else {}
    L1, L2, L3 = bidouble_solve(B[1], B[2], B[3])
    inv = bidouble_invariants(B[1], B[2], B[3])
    K = canonical(DP4)
    expected_L1 = 3 * _l() - 2 * _e(1) - _e(3) - _e(4) - _e(5)
    expected_L = [expected_L1, _cycle(expected_L1), _cycle(_cycle(expected_L1))]

    computed = {
        "normal_crossing": nc.status,
        "B_i from arrangement": {str(i): str(from_lines.get(i)) for i in (1, 2, 3)},
        "B1 + B2 + B3 = -3K": B[1] + B[2] + B[3] == -3 * K,
        "L_i": [str(x) for x in (L1, L2, L3)],
        "K + L_i effective": [is_effective(K + x) for x in (L1, L2, L3)],
        "K2": inv.K2,
        "chi": inv.chi,
        "pg": inv.pg_lower,
        "q": inv.q_lower,
    }
    claimed = {
        "normal_crossing": "PASS",
        "B_i from arrangement": {str(i): str(B[i]) for i in (1, 2, 3)},
        "B1 + B2 + B3 = -3K": True,
        "L_i": [str(x) for x in expected_L],
        "K + L_i effective": [False] * 3,
        "K2": 4,
        "chi": 1,
        "pg": 0,
        "q": 0,
    }
    details = {"points": [str(p) for p in arr.points], "normal_crossing": nc.computed}
    if fuzz > 0:
        stats = fuzz_normal_crossing(seed=seed, count=fuzz)
        computed["fuzz pass rate >= 95%"] = stats.pass_rate >= Fraction(95, 100)
        computed["fuzz failures witnessed"] = stats.witnesses_rechecked == stats.failed
        claimed["fuzz pass rate >= 95%"] = True
        claimed["fuzz failures witnessed"] = True
        details["fuzz"] = {
            "seed": seed, "configs": stats.configs, "passed": stats.passed,
            "failed": stats.failed, "witnesses_rechecked": stats.witnesses_rechecked,
            "degenerate_skipped": stats.degenerate_skipped, "failures": stats.failures,
        }
    return make_report(
        "burniat",
        "B_1 = e1 + e'1 + g2 + h2 = 3l + e1 - 3e2 - e3 - e4 - e5 (and cyclically); the bidouble cover"
        " has p_g = 0, K^2 = 4",
        claimed,
        computed,
        axioms_used=("bidouble-existence", "bidouble-formulas", "dp-effective-cone"),
        details=details,
    )


# -- Cremona moves -----------------------------------------------------------

def check_cremona() -> CheckReport:
    lines = enumerate_lines(DP4)
    excluded = {"delta", "e1", "e2", "e3", "e4", "e5"}
    admissible = [x for x in lines if x.name not in excluded]
    witnesses = {}
    found = {}
    for x in admissible:
        try:
            w = cremona_witness(x)
        except SearchFailureError as exc:
            found[x.name] = False
            witnesses[x.name] = repr(exc)
            continue
        img = w(x.cls)
        found[x.name] = img != line_by_name("delta") and img in {DP4.e(i) for i in range(1, 6)}
        witnesses[x.name] = f"{w.label}: {x.name} -> {img}"

    def rejected(name):
        try:
            cremona_witness(line_by_name(name))
        except PreconditionError:
            return True
        return False

    orb = orbit(DP4.e(1), root_reflections(DP4))
    computed = {
        "admissible": len(admissible),
        "witness found": found,
        "delta rejected": rejected("delta"),
        "e1..e5 rejected": all(rejected(f"e{i}") for i in range(1, 6)),
        "Weyl orbit of e1 = lines": set(orb) == {x.cls for x in lines},
    }
    claimed = {
        "admissible": 10,
        "witness found": {x.name: True for x in admissible},
        "delta rejected": True,
        "e1..e5 rejected": True,
        "Weyl orbit of e1 = lines": True,
    }
    return make_report(
        "cremona",
        "every (-1)-curve other than delta and e1..e5 is moved onto some e_i by one Cremona"
        " transformation in three of the points",
        claimed,
        computed,
        axioms_used=("cremona-realizable",),
        details={"witnesses": witnesses},
    )


# -- non-existence search ------------------------------------------------------

def check_ne1e() -> CheckReport:
    summary = ne1e_summary(DP4)
    lines = [x.cls for x in enumerate_lines(DP4)]
    sums = {a + b for a in lines for b in lines}
    conics_reducible = all(c in sums for c in enumerate_conic_classes(DP4))
    return make_report(
        "ne1e",
        "no d on Sigma has h^0(d) > 1 with -K_Sigma - 2d effective",
        {"survivors": [], "conic classes are sums of two lines": True},
        {"survivors": [str(d) for d in summary.survivors], "conic classes are sums of two lines": conics_reducible},
        axioms_used=("dp-effective-cone",),
        details={"candidates": summary.candidates, "rejections": summary.rejections,
                 "verdict": "no such d" if not summary.survivors else "counterexample found"},
    )


# -- everything ------------------------------------------------------------

def run_all(points: Sequence[ProjPoint] | None = None, seed: int = 0, fuzz: int = 1000) -> list[CheckReport]:
    reports = [
        check_lines(5),
        check_miyaoka(),
        *check_ramification_residuals(),
        check_c1c2c3(),
        check_invariants(),
        check_fijki(),
        check_step1(),
        check_pullback(),
        check_burniat(points, seed=seed, fuzz=fuzz),
        check_cremona(),
        check_ne1e(),
    ]
    return sorted(reports, key=lambda r: r.check_id)


def axiom_ledger() -> list[dict]:
    return [axiom_record(k) for k in sorted(AXIOMS)]
