"""Exact projective plane geometry for the five blown-up points and the nine Burniat lines.

Coordinates are :class:`fractions.Fraction`; incidence is an exact zero test.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from pathlib import Path
from typing import Iterable, Sequence

from burniat.errors import InvalidInputError
from burniat.lattice import DivisorClass, Lattice
from burniat.reports import CheckReport, make_report

DEFAULT_POINTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3))

# line name -> the two defining points (1-based)
LINE_SUPPORT = {
    "e'1": (2, 3), "e'2": (1, 3), "e'3": (1, 2),
    "g1": (1, 4), "g2": (2, 4), "g3": (3, 4),
    "h1": (1, 5), "h2": (2, 5), "h3": (3, 5),
}

# B_i = e_i + (three lines)
BRANCH_GROUPS = {
    1: ("e'1", "g2", "h2"),
    2: ("e'2", "g3", "h3"),
    3: ("e'3", "g1", "h1"),
}


def _normalize(coords: Iterable) -> tuple[Fraction, ...]:
    v = tuple(Fraction(c) for c in coords)
    if len(v) != 3:
        raise InvalidInputError(f"need three homogeneous coordinates, got {len(v)}")
    lead = next((c for c in v if c != 0), None)
    if lead is None:
        raise InvalidInputError("all homogeneous coordinates are zero")
    return tuple(c / lead for c in v)


def _integral(v: tuple[Fraction, ...]) -> tuple[int, int, int]:
    """Integer multiple of ``v``; same projective point, cheaper determinants."""
    m = 1
    for c in v:
        m = lcm(m, c.denominator)
    return tuple(int(c * m) for c in v)


@dataclass(frozen=True)
class ProjPoint:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", _normalize(self.coords))
        object.__setattr__(self, "ints", _integral(self.coords))

    def __str__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class ProjLine:
    """The line ``{x : coords . x = 0}``."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", _normalize(self.coords))
        object.__setattr__(self, "ints", _integral(self.coords))

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(u, v, w) -> Fraction:
    return sum(a * b for a, b in zip(u, _cross(v, w)))


def join(p: ProjPoint, q: ProjPoint) -> ProjLine:
    if p == q:
        raise InvalidInputError(f"cannot join {p} with itself")
    return ProjLine(_cross(p.ints, q.ints))


def meet(a: ProjLine, b: ProjLine) -> ProjPoint:
    if a == b:
        raise InvalidInputError(f"{a} and {b} coincide")
    return ProjPoint(_cross(a.ints, b.ints))


def incident(p: ProjPoint, line: ProjLine) -> bool:
    return sum(x * y for x, y in zip(p.ints, line.ints)) == 0


def general_position(points: Sequence[ProjPoint]) -> bool:
    """No three of the five points are collinear."""
    if len(points) != 5:
        raise InvalidInputError(f"need exactly 5 points, got {len(points)}")
    if len(set(points)) != 5:
        raise InvalidInputError("points must be pairwise distinct")
    return all(det3(p.ints, q.ints, r.ints) != 0 for p, q, r in combinations(points, 3))


@dataclass(frozen=True)
class BurniatArrangement:
    points: tuple[ProjPoint, ...]
    lines: dict[str, ProjLine] = field(hash=False)

    @classmethod
    def from_points(cls, points: Sequence) -> "BurniatArrangement":
        pts = tuple(p if isinstance(p, ProjPoint) else ProjPoint(tuple(p)) for p in points)
        if len(pts) != 5:
            raise InvalidInputError(f"need exactly 5 points, got {len(pts)}")
        if len(set(pts)) != 5:
            raise InvalidInputError("points must be pairwise distinct")
        lines = {name: join(pts[i - 1], pts[j - 1]) for name, (i, j) in LINE_SUPPORT.items()}
        return cls(pts, lines)

    @classmethod
    def default(cls) -> "BurniatArrangement":
        return cls.from_points(DEFAULT_POINTS)

    def lines_through(self, i: int) -> tuple[str, ...]:
        p = self.points[i - 1]
        return tuple(name for name, line in self.lines.items() if incident(p, line))


def expected_incidence() -> dict[int, tuple[str, ...]]:
    return {i: tuple(n for n, sup in LINE_SUPPORT.items() if i in sup) for i in range(1, 6)}


def class_of_line(arr: BurniatArrangement, name: str) -> DivisorClass:
    """Class of the strict transform: ``l`` minus ``e_i`` for each point on the line."""
    if name not in arr.lines:
        raise KeyError(f"unknown arrangement line {name!r}")
    lat = Lattice(5)
    d = lat.l()
    for i in range(1, 6):
        if incident(arr.points[i - 1], arr.lines[name]):
            d = d - lat.e(i)
    return d


def branch_class(arr: BurniatArrangement, i: int) -> DivisorClass:
    """``B_i = e_i`` plus the classes of its three lines."""
    d = Lattice(5).e(i)
    for name in BRANCH_GROUPS[i]:
        d = d + class_of_line(arr, name)
    return d


@dataclass(frozen=True)
class Concurrency:
    lines: tuple[str, str, str]
    point: ProjPoint | None  # None when two of the lines coincide

    def to_dict(self) -> dict:
        return {"lines": list(self.lines), "point": None if self.point is None else str(self.point)}


def concurrency_witnesses(lines: dict[str, ProjLine], allowed: Iterable[ProjPoint]) -> list[Concurrency]:
    """Triples of lines through a common point outside ``allowed`` (or containing a repeated line)."""
    allowed = set(allowed)
    bad = []
    for a, b, c in combinations(sorted(lines), 3):
        la, lb, lc = lines[a], lines[b], lines[c]
        if det3(la.ints, lb.ints, lc.ints) != 0:
            continue
        if la == lb or la == lc or lb == lc:
            bad.append(Concurrency((a, b, c), None))
            continue
        p = meet(la, lb)
        if p not in allowed:
            bad.append(Concurrency((a, b, c), p))
    return bad


def recheck_witness(lines: dict[str, ProjLine], w: Concurrency) -> bool:
    """Independent confirmation: the witness point lies on all three lines."""
    if w.point is None:
        names = w.lines
        return len({lines[n] for n in names}) < 3
    return all(incident(w.point, lines[n]) for n in w.lines)


def normal_crossing(arr: BurniatArrangement) -> CheckReport:
    """Certify that ``e_i`` plus the nine line transforms form a normal-crossing divisor.

    Distinct lines meet transversally and the blow-up separates the lines
    through each ``p_i``, so it suffices that no three lines concur away from
    the five points and that each point lies on exactly its expected lines.
    """
    anchor = "B = B_1 + B_2 + B_3 is a normal crossing divisor on Sigma"
    claimed = {"general_position": True, "incidence": _jsonable(expected_incidence()), "concurrencies": []}
    try:
        ok = general_position(arr.points)
    except InvalidInputError as exc:
        return make_report("plane.normal_crossing", anchor, claimed, {"general_position": False},
                           details={"reason": str(exc)})
    if not ok:
        return make_report("plane.normal_crossing", anchor, claimed, {"general_position": False},
                           details={"reason": "three of the points are collinear"})
    incidence = {i: arr.lines_through(i) for i in range(1, 6)}
    witnesses = concurrency_witnesses(arr.lines, arr.points)
    computed = {
        "general_position": True,
        "incidence": _jsonable(incidence),
        "concurrencies": [w.to_dict() for w in witnesses],
    }
    return make_report(
        "plane.normal_crossing", anchor, claimed, computed,
        details={"triples_checked": len(list(combinations(arr.lines, 3)))},
    )


def _jsonable(table: dict[int, tuple[str, ...]]) -> dict[str, list[str]]:
    return {f"p{i}": sorted(names) for i, names in table.items()}


def parse_points(text: str) -> list[ProjPoint]:
    """One point per line, three integers or rationals (``1/2``); ``#`` starts a comment."""
    pts = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 3:
            raise InvalidInputError(f"line {lineno}: expected 3 coordinates, got {len(parts)}")
        try:
            coords = tuple(Fraction(x) for x in parts)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"line {lineno}: {exc}") from exc
        pts.append(ProjPoint(coords))
    if len(pts) != 5:
        raise InvalidInputError(f"expected 5 points, found {len(pts)}")
    return pts


def read_points(path: str | Path) -> list[ProjPoint]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc}") from exc
    return parse_points(text)


@dataclass
class FuzzStats:
    seed: int
    configs: int = 0
    degenerate_skipped: int = 0
    passed: int = 0
    failed: int = 0
    witnesses_rechecked: int = 0
    failures: list = field(default_factory=list)

    @property
    def pass_rate(self) -> Fraction:
        return Fraction(self.passed, self.configs) if self.configs else Fraction(0)


def random_points(rng: random.Random, bound: int) -> list[tuple[int, int, int]]:
    pts = []
    while len(pts) < 5:
        v = tuple(rng.randint(-bound, bound) for _ in range(3))
        if any(v):
            pts.append(v)
    return pts


def fuzz_normal_crossing(seed: int = 0, count: int = 1000, bound: int = 30) -> FuzzStats:
    """Certify ``count`` random non-degenerate integer configurations.

    Degenerate draws (repeated or collinear points) are skipped and counted.
    Every failure must carry a witness that :func:`recheck_witness` confirms.
    """
    rng = random.Random(seed)
    stats = FuzzStats(seed)
    while stats.configs < count:
        raw = random_points(rng, bound)
        pts = [ProjPoint(p) for p in raw]
        if len(set(pts)) != 5 or not general_position(pts):
            stats.degenerate_skipped += 1
            continue
        arr = BurniatArrangement.from_points(pts)
        stats.configs += 1
        report = normal_crossing(arr)
        if report.passed:
            stats.passed += 1
            continue
        stats.failed += 1
        witnesses = concurrency_witnesses(arr.lines, arr.points)
        if witnesses and all(recheck_witness(arr.lines, w) for w in witnesses):
            stats.witnesses_rechecked += 1
        stats.failures.append({"points": [str(p) for p in pts], "witnesses": [w.to_dict() for w in witnesses]})
    return stats
