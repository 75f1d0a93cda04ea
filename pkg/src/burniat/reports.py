"""Check reports and the ledger of facts that are assumed rather than computed."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

PASS = "PASS"
FAIL = "FAIL"


@dataclass(frozen=True)
class CheckReport:
    """Result of one replayed computation.

    ``status`` is ``PASS`` exactly when ``computed == claimed``; both are plain
    JSON values (ints, strings, booleans, lists, dicts), so the comparison is
    exact equality with no tolerance.
    """

    check_id: str
    anchor: str
    claimed: Any
    computed: Any
    status: str
    axioms_used: tuple[str, ...] = ()
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict[str, Any]:
        d = asdict(self)
        d["axioms_used"] = list(self.axioms_used)
        d["kind"] = "check"
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, default=str)


def make_report(check_id, anchor, claimed, computed, axioms_used=(), details=None) -> CheckReport:
    status = PASS if claimed == computed else FAIL
    unknown = [a for a in axioms_used if a not in AXIOMS]
    if unknown:
        raise KeyError(f"undeclared axioms {unknown}")
    return CheckReport(check_id, anchor, claimed, computed, status, tuple(axioms_used), details or {})


# Facts the replay relies on without computing them.  Keys are stable ids
# referenced from ``axioms_used``; values state the fact in full.
AXIOMS: dict[str, str] = {
    "dp-effective-cone": (
        "On the blow-up of P^2 at 5 points with no three collinear the effective cone is "
        "generated by the 16 lines and nef classes have h^1 = h^2 = 0."
    ),
    "bidouble-formulas": (
        "A smooth bidouble cover with branch data D_i, L_i satisfies 2K_Y = psi^*(2K + D), "
        "chi(O_Y) = 4chi(O) + 1/2 sum L_i(K + L_i), p_g(Y) = p_g + sum h^0(K + L_i)."
    ),
    "bidouble-existence": (
        "Smooth branch divisors D_1, D_2, D_3 with normal-crossing sum and 2L_1 = D_2 + D_3, "
        "2L_2 = D_1 + D_3 define a bidouble cover with L_3 = L_1 + L_2 - D_3."
    ),
    "double-cover-formulas": (
        "A double cover Y -> S branched on B = 2L has K_Y^2 = 2(K_S + L)^2, "
        "chi(O_Y) = 2chi(O_S) + L(K_S + L)/2, p_g(Y) = p_g(S) + h^0(K_S + L), "
        "q(Y) = q(S) + h^1(K_S + L)."
    ),
    "bicanonical-pullback": (
        "The bicanonical morphism phi: S -> Sigma of degree 4 onto the quartic del Pezzo surface "
        "satisfies phi^*(-K_Sigma) = 2K_S."
    ),
    "hurwitz": "The ramification divisor of phi satisfies K_S = phi^*(K_Sigma) + R, hence R = 3K_S.",
    "finite-ample": "phi is finite and K_S is ample, so K_S.C > 0 for every nonzero effective C.",
    "line-pullback-dichotomy": (
        "The pullback of a (-1)-curve of Sigma is either a reduced smooth rational (-4)-curve "
        "or 2E with E^2 = -1, K_S.E = 1."
    ),
    "miyaoka-bound": (
        "r disjoint smooth rational (-4)-curves on a minimal surface of general type satisfy "
        "25r/12 <= c_2 - K^2/3."
    ),
    "noether": "Noether's formula c_2 = 12chi(O_S) - K_S^2.",
    "albanese-curve": (
        "For a smooth double cover Y of a surface with p_g = q = 0 and q(Y) > 0 the Albanese image "
        "of Y is a curve, and the Albanese pencil comes from a fibration of the base."
    ),
    "kq-inequality": (
        "A smooth double cover Y of a surface of general type with p_g = q = 0, K^2 >= 3 "
        "satisfies K_Y^2 >= 16(q(Y) - 1)."
    ),
    "moving-part-descent": (
        "For a finite phi with |phi^*h| = phi^*|h| and a fixed-part-free |M| with phi^*h - M "
        "effective, |M| = phi^*|m| for some m with h - m effective."
    ),
    "genus3-fibration": "For general f_i in |f_i| the pullback phi^*(f_i) is connected.",
    "eta-nontrivial": "The classes eta_i = (E_j + E'_k) - (E'_j + E_k) are nonzero, hence of order 2.",
    "eta-restrictions": (
        "On a general F_i: (-eta + eta_j)|F_i is trivial for i != j, eta_i|F_i is trivial and "
        "(-eta + eta_i)|F_i is not."
    ),
    "kodaira-vanishing": "h^1(S, 2K_S) = 0 for ample K_S, so h^0(2K_S) = chi(2K_S).",
    "vanishing-2K+E4+E5": (
        "h^0(2K_S + E_4 + E_5) = chi(2K_S + E_4 + E_5), from the restriction sequence to the "
        "rational curves E_4, E_5 and h^1(2K_S) = 0."
    ),
    "three-fibrations": (
        "A fibration of S with E_4 and E_5 in fibres is induced by one of |F_1|, |F_2|, |F_3|."
    ),
    "cremona-realizable": (
        "Every lattice-level Cremona reflection used is induced by an automorphism of Sigma "
        "for the given point configuration."
    ),
    "step2-cyclic": "The fibration indices (s_1 s_2 s_3) form a cyclic permutation.",
    "step3-nonreduced": "phi^*(g_3) and phi^*(h_3) are not reduced.",
    "step4-hyperelliptic": "A general F_i is hyperelliptic for i = 1, 2, 3.",
    "step5-galois": "phi is a Galois cover with group Z/2 x Z/2.",
    "step6-branch": (
        "The fixed loci of the three involutions map onto B_i = e_i + e'_i + g_(i+1) + h_(i+1)."
    ),
    "step1-double-fibres": "Each fibration u_i has exactly two double fibres.",
}


def axiom_record(axiom_id: str) -> dict[str, Any]:
    return {"kind": "axiom", "axiom_id": axiom_id, "statement": AXIOMS[axiom_id], "status": "ASSUMED"}
