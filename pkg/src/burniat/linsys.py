"""Effectivity and ``h^0`` on the degree-4 del Pezzo surface by peeling off lines.

Imported fact (standard del Pezzo theory, not proved here): on the blow-up
of the plane at five points with no three collinear, the only irreducible
curves of negative self-intersection are the sixteen lines, the effective
cone is generated by them, and every nef class ``D`` has ``h^1 = h^2 = 0``,
so ``h^0(D) = chi(D)``.

Peeling: if ``D`` is effective and ``D.E < 0`` for a line ``E``, then ``E`` is
a fixed component of ``|D|`` and ``h^0(D) = h^0(D - E)``.  Each step lowers
the anticanonical degree by one, so the loop ends either at a nef class or
at a class of negative degree, which cannot be effective because ``-K`` is
ample.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from dataclasses import dataclass
from typing import Sequence

from burniat.curves import NamedLine, enumerate_conic_classes, enumerate_lines
from burniat.errors import UnsupportedLatticeError
from burniat.lattice import DivisorClass, Lattice, anticanonical_degree, canonical, intersect, rr_chi

DP4 = Lattice(5)


@lru_cache(maxsize=None)
def _lines(lattice: Lattice) -> tuple[NamedLine, ...]:
    return tuple(enumerate_lines(lattice))


def _require_dp4(d: DivisorClass) -> None:
    if d.lattice.n != 5:
        raise UnsupportedLatticeError(
            f"effectivity is implemented for the degree-4 del Pezzo lattice (n=5), got n={d.lattice.n}"
        )


@dataclass(frozen=True)
class H0Result:
    """Outcome of peeling.

    ``nef_part`` is the class where peeling stopped: the nef residue when
    ``value > 0``, or the first class of negative anticanonical degree when
    ``value == 0``.
    """

    value: int
    peel_trace: tuple[tuple[str, int], ...]
    nef_part: DivisorClass


def _peel(d: DivisorClass, lines: Sequence[NamedLine]):
    trace: list[tuple[str, int]] = []
    while True:
        if anticanonical_degree(d) < 0:
            return d, trace, False
        for line in lines:
            if intersect(d, line.cls) < 0:
                d = d - line.cls
                if trace and trace[-1][0] == line.name:
                    trace[-1] = (line.name, trace[-1][1] + 1)
                else:
                    trace.append((line.name, 1))
                break
        else:
            return d, trace, True


def h0(d: DivisorClass, line_order: Sequence[NamedLine] | None = None) -> H0Result:
    """Dimension of ``H^0(O(D))``; ``line_order`` overrides the lexicographic tie-break."""
    _require_dp4(d)
    lines = _lines(d.lattice) if line_order is None else line_order
    rest, trace, nef = _peel(d, lines)
    if not nef:
        value = 0
    elif rest.is_zero():
        value = 1
    elif anticanonical_degree(rest) > 0:
        value = rr_chi(rest)
    else:
        # nef, nonzero, orthogonal to an ample class: impossible by Hodge index
        value = 0
    return H0Result(value, tuple(trace), rest)


def is_effective(d: DivisorClass) -> bool:
    return h0(d).value > 0


def is_nef(d: DivisorClass) -> bool:
    _require_dp4(d)
    return all(intersect(d, line.cls) >= 0 for line in _lines(d.lattice))


# -- search for d with h0(d) > 1 and -K - 2d effective ---------------------
#
# -K is ample, so effectivity of -K - 2d gives 2 d.(-K) <= (-K)^2 = 4, i.e.
# d.(-K) <= 2; h0(d) > 1 makes d effective.  The effective monoid is generated
# by the lines, each of anticanonical degree 1, so every candidate is a sum of
# at most two lines.  Conic classes are sums of two meeting lines and are
# listed explicitly only as a cross-check of that reduction.

REASON_H0 = "h0<=1"
REASON_RESIDUAL = "residual_not_effective"


def ne1e_candidates(lattice: Lattice = DP4) -> list[DivisorClass]:
    if lattice.n != 5:
        raise UnsupportedLatticeError("the search runs on the degree-4 del Pezzo lattice")
    lines = [x.cls for x in _lines(lattice)]
    found = {lattice.zero()}
    found.update(lines)
    for i, a in enumerate(lines):
        for b in lines[i:]:
            found.add(a + b)
    found.update(enumerate_conic_classes(lattice))
    return sorted(found)


def ne1e_classify(d: DivisorClass) -> str | None:
    """Why ``d`` fails the two search conditions, or ``None`` if it satisfies both."""
    if h0(d).value <= 1:
        return REASON_H0
    if not is_effective(-canonical(d.lattice) - 2 * d):
        return REASON_RESIDUAL
    return None


def ne1e_search(lattice: Lattice = DP4) -> list[DivisorClass]:
    """Every candidate with ``h0(d) > 1`` and ``-K - 2d`` effective; expected empty."""
    return [d for d in ne1e_candidates(lattice) if ne1e_classify(d) is None]


@dataclass(frozen=True)
class Ne1eSummary:
    candidates: int
    rejections: dict[str, int]
    survivors: tuple[DivisorClass, ...]


def ne1e_summary(lattice: Lattice = DP4) -> Ne1eSummary:
    counts: Counter[str] = Counter()
    survivors = []
    for d in ne1e_candidates(lattice):
        reason = ne1e_classify(d)
        if reason is None:
            survivors.append(d)
        else:
            counts[reason] += 1
    return Ne1eSummary(
        candidates=sum(counts.values()) + len(survivors),
        rejections=dict(sorted(counts.items())),
        survivors=tuple(survivors),
    )
