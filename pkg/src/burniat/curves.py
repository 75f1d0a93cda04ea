"""Lines, roots and conic classes on blow-ups of the plane at up to 8 points.

Every distinguished class ``D = a*l + sum(b_i e_i)`` is cut out by two
equations, one quadratic (``D^2``) and one linear (``D.K``).  Writing
``D^2 = s`` and ``D.K = t`` gives

    sum(b_i^2) = a^2 - s,    sum(b_i) = -t - 3a.

Cauchy-Schwarz, ``(sum b_i)^2 <= n * sum(b_i^2)``, then confines ``a`` to the
integer solutions of

    (9 - n) a^2 + 6 t a + t^2 + n s <= 0,

a bounded interval whenever ``n <= 8``.  For each admissible ``a`` the
exceptional coefficients are enumerated exactly by a pruned search over
vectors with prescribed square sum and sum, so the output is complete.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd, isqrt
from typing import Iterator

from burniat.errors import UnsupportedLatticeError
from burniat.lattice import DivisorClass, Lattice, intersect

MAX_POINTS = 8

# Admissible l-coefficients per n, from the Cauchy-Schwarz inequality above.
# lines   (s=-1, t=-1): (9-n)a^2 - 6a + 1 - n <= 0
# roots   (s=-2, t= 0): (9-n)a^2 - 2n       <= 0
# conics  (s= 0, t=-2): (9-n)a^2 - 12a + 4  <= 0
# (the test suite re-derives every range from the quadratic)
LINE_A_RANGE = {0: (), 1: (0,), 2: (0, 1), 3: (0, 1), 4: (0, 1),
                5: (0, 1, 2), 6: (0, 1, 2), 7: (0, 1, 2, 3), 8: tuple(range(-1, 8))}
ROOT_A_RANGE = {0: (0,), 1: (0,), 2: (0,), 3: (-1, 0, 1), 4: (-1, 0, 1),
                5: (-1, 0, 1), 6: (-2, -1, 0, 1, 2), 7: (-2, -1, 0, 1, 2),
                8: tuple(range(-4, 5))}
CONIC_A_RANGE = {0: (), 1: (1,), 2: (1,), 3: (1,), 4: (1, 2), 5: (1, 2),
                 6: (1, 2, 3), 7: tuple(range(1, 6)), 8: tuple(range(1, 12))}


def _require_del_pezzo(lattice: Lattice) -> None:
    if lattice.n > MAX_POINTS:
        raise UnsupportedLatticeError(
            f"n={lattice.n}: beyond 8 points the classes are infinite in number"
        )


def _vectors(k: int, square_sum: int, total: int) -> Iterator[tuple[int, ...]]:
    """All integer ``k``-vectors with the given sum of squares and sum."""
    if square_sum < 0 or total * total > k * square_sum:
        return
    if (square_sum - total) % 2:
        # b^2 and b have equal parity, so the two sums must too
        return
    if k == 0:
        if square_sum == 0 and total == 0:
            yield ()
        return
    r = isqrt(square_sum)
    for b in range(-r, r + 1):
        for rest in _vectors(k - 1, square_sum - b * b, total - b):
            yield (b,) + rest


def _solve(lattice: Lattice, self_int: int, k_degree: int, a_range) -> list[DivisorClass]:
    n = lattice.n
    found = []
    for a in a_range:
        for b in _vectors(n, a * a - self_int, -k_degree - 3 * a):
            found.append(DivisorClass((a,) + b, lattice))
    return sorted(found)


def _classical_names() -> dict[tuple[int, ...], str]:
    lat = Lattice(5)
    l, e = lat.l(), lat.e
    names = {}
    for i in range(1, 6):
        names[e(i).coeffs] = f"e{i}"
    for j, (k, m) in zip((1, 2, 3), ((2, 3), (1, 3), (1, 2))):
        names[(l - e(k) - e(m)).coeffs] = f"e'{j}"
    for j in (1, 2, 3):
        names[(l - e(4) - e(j)).coeffs] = f"g{j}"
        names[(l - e(5) - e(j)).coeffs] = f"h{j}"
    names[(l - e(4) - e(5)).coeffs] = "gamma"
    names[(2 * l - e(1) - e(2) - e(3) - e(4) - e(5)).coeffs] = "delta"
    return names


_N5_NAMES = _classical_names()


@dataclass(frozen=True)
class NamedLine:
    cls: DivisorClass
    name: str

    def __str__(self) -> str:
        return f"{self.name}={self.cls}"


def line_name(d: DivisorClass) -> str:
    """Conventional name for ``n = 5`` (``e'1``, ``g2``, ``gamma``...), else the coordinates."""
    if d.lattice.n == 5 and d.coeffs in _N5_NAMES:
        return _N5_NAMES[d.coeffs]
    return str(d)


def enumerate_lines(lattice: Lattice) -> list[NamedLine]:
    """All ``D`` with ``D^2 = D.K = -1``, in lexicographic order of coefficients."""
    _require_del_pezzo(lattice)
    classes = _solve(lattice, -1, -1, LINE_A_RANGE[lattice.n])
    return [NamedLine(d, line_name(d)) for d in classes]


def enumerate_roots(lattice: Lattice) -> list[DivisorClass]:
    """All ``D`` with ``D^2 = -2`` and ``D.K = 0`` (both signs)."""
    _require_del_pezzo(lattice)
    return _solve(lattice, -2, 0, ROOT_A_RANGE[lattice.n])


def positive_roots(lattice: Lattice) -> list[DivisorClass]:
    """Roots whose first nonzero coefficient is positive (``l - ...`` or ``e_i - e_j``, i<j)."""
    return [r for r in enumerate_roots(lattice) if next(c for c in r.coeffs if c) > 0]


def enumerate_conic_classes(lattice: Lattice) -> list[DivisorClass]:
    """Primitive ``D`` with ``D^2 = 0``, ``D.K = -2`` and nonnegative ``l``-coefficient."""
    _require_del_pezzo(lattice)
    out = []
    for d in _solve(lattice, 0, -2, CONIC_A_RANGE[lattice.n]):
        g = 0
        for c in d.coeffs:
            g = gcd(g, c)
        if g == 1:
            out.append(d)
    return out


def intersection_table(lines: list[NamedLine]) -> list[list[int]]:
    return [[intersect(a.cls, b.cls) for b in lines] for a in lines]


def disjoint_pairs(lines: list[NamedLine]) -> list[tuple[NamedLine, NamedLine]]:
    return [(a, b) for a, b in combinations(lines, 2) if intersect(a.cls, b.cls) == 0]


def format_line_table(lines: list[NamedLine]) -> list[str]:
    """One record per line: ``name<TAB>vector<TAB>incidence row``."""
    table = intersection_table(lines)
    rows = []
    for line, row in zip(lines, table):
        vec = " ".join(str(c) for c in line.cls.coeffs)
        inc = " ".join(f"{x:d}" for x in row)
        rows.append(f"{line.name}\t{vec}\t{inc}")
    return rows


def line_by_name(name: str) -> DivisorClass:
    """Look up one of the sixteen named lines of the degree-4 del Pezzo surface."""
    for coeffs, nm in _N5_NAMES.items():
        if nm == name:
            return DivisorClass(coeffs, Lattice(5))
    raise KeyError(name)
