"""Root reflections, Weyl orbits and Cremona moves on the Picard lattice."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from burniat.curves import NamedLine, enumerate_lines, line_name, positive_roots
from burniat.errors import (
    DimensionError,
    InvalidRootError,
    OrbitCapError,
    PreconditionError,
    SearchFailureError,
)
from burniat.lattice import DivisorClass, Lattice, canonical, intersect

DEFAULT_ORBIT_CAP = 10_000


@dataclass(frozen=True)
class LatticeAutomorphism:
    """Integer matrix acting on coefficient vectors; column ``j`` is the image of basis vector ``j``."""

    matrix: tuple[tuple[int, ...], ...]
    lattice: Lattice
    label: str = ""

    def __post_init__(self):
        m = tuple(tuple(row) for row in self.matrix)
        r = self.lattice.rank
        if len(m) != r or any(len(row) != r for row in m):
            raise DimensionError(f"expected a {r}x{r} matrix")
        object.__setattr__(self, "matrix", m)

    @classmethod
    def identity(cls, lattice: Lattice) -> "LatticeAutomorphism":
        r = lattice.rank
        return cls(tuple(tuple(int(i == j) for j in range(r)) for i in range(r)), lattice, "id")

    def __call__(self, d: DivisorClass) -> DivisorClass:
        if d.lattice != self.lattice:
            raise DimensionError(f"rank {d.lattice.rank} vs automorphism of rank {self.lattice.rank}")
        v = d.coeffs
        return DivisorClass(tuple(sum(a * x for a, x in zip(row, v)) for row in self.matrix), self.lattice)

    def __matmul__(self, other: "LatticeAutomorphism") -> "LatticeAutomorphism":
        """Composition ``self o other``."""
        if other.lattice != self.lattice:
            raise DimensionError("composing automorphisms of different lattices")
        a, b = self.matrix, other.matrix
        r = self.lattice.rank
        prod = tuple(tuple(sum(a[i][k] * b[k][j] for k in range(r)) for j in range(r)) for i in range(r))
        return LatticeAutomorphism(prod, self.lattice, f"{self.label}*{other.label}")

    def is_identity(self) -> bool:
        return self.matrix == LatticeAutomorphism.identity(self.lattice).matrix

    def preserves_form(self) -> bool:
        basis = self.lattice.basis()
        images = [self(b) for b in basis]
        return all(
            intersect(images[i], images[j]) == intersect(basis[i], basis[j])
            for i in range(len(basis))
            for j in range(i, len(basis))
        )

    def fixes_canonical(self) -> bool:
        k = canonical(self.lattice)
        return self(k) == k


def is_root(d: DivisorClass) -> bool:
    return intersect(d, d) == -2 and intersect(d, canonical(d.lattice)) == 0


def reflection(root: DivisorClass) -> LatticeAutomorphism:
    """The involution ``D -> D + (D.r) r`` in a ``(-2)``-root ``r``."""
    if not is_root(root):
        raise InvalidRootError(f"{root} is not a root (need r^2 = -2, r.K = 0)")
    lat = root.lattice
    cols = []
    for b in lat.basis():
        cols.append((b + intersect(b, root) * root).coeffs)
    matrix = tuple(tuple(col[i] for col in cols) for i in range(lat.rank))
    return LatticeAutomorphism(matrix, lat, f"s[{root}]")


def root_reflections(lattice: Lattice) -> list[LatticeAutomorphism]:
    """Reflections in all positive roots; they generate the Weyl group."""
    return [reflection(r) for r in positive_roots(lattice)]


def cremona_roots(lattice: Lattice) -> list[DivisorClass]:
    """The roots ``l - ei - ej - ek``, in lexicographic index order."""
    l, e = lattice.l(), lattice.e
    return [l - e(i) - e(j) - e(k) for i, j, k in combinations(range(1, lattice.n + 1), 3)]


def orbit(
    start: DivisorClass,
    generators: Sequence[LatticeAutomorphism],
    cap: int = DEFAULT_ORBIT_CAP,
) -> list[DivisorClass]:
    """Closure of ``{start}`` under ``generators``, sorted lexicographically."""
    seen = {start}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for g in generators:
            img = g(d)
            if img not in seen:
                seen.add(img)
                if len(seen) > cap:
                    raise OrbitCapError(f"orbit of {start} exceeds cap {cap}")
                queue.append(img)
    return sorted(seen)


def image_of_set(w: LatticeAutomorphism, classes: Iterable[DivisorClass]) -> set[DivisorClass]:
    return {w(d) for d in classes}


def cremona_witness(e: DivisorClass | NamedLine) -> LatticeAutomorphism:
    """One Cremona reflection sending the line ``e`` onto some ``e_i``.

    Only defined on the degree-4 del Pezzo lattice, for lines other than
    ``delta`` and the exceptional curves ``e1..e5`` themselves.  The ten
    Cremona roots are tried in lexicographic order.  Whether the lattice
    move is induced by an automorphism of a particular surface is not
    checked here.
    """
    if isinstance(e, NamedLine):
        e = e.cls
    lat = e.lattice
    if lat.n != 5:
        raise PreconditionError(f"Cremona witnesses are searched on n=5 only, got n={lat.n}")
    lines = {x.cls for x in enumerate_lines(lat)}
    if e not in lines:
        raise PreconditionError(f"{e} is not a (-1)-class")
    exceptional = {lat.e(i) for i in range(1, 6)}
    name = line_name(e)
    if name == "delta":
        raise PreconditionError("delta is excluded")
    if e in exceptional:
        raise PreconditionError(f"{name} is already contracted by the blow-down")
    for r in cremona_roots(lat):
        w = reflection(r)
        img = w(e)
        if img in exceptional:
            return w
    # a composite of two Cremona moves would be the next thing to try
    raise SearchFailureError(f"no single Cremona reflection moves {name} onto an exceptional curve")
