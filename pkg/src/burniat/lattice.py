"""Picard lattice of the blow-up of the projective plane at ``n`` points.

The lattice is ``Z^{1,n}`` with basis ``l, e1, ..., en`` and diagonal form
``diag(+1, -1, ..., -1)``.  A class ``a*l + b1*e1 + ... + bn*en`` is stored as
the coefficient tuple ``(a, b1, ..., bn)``; note the exceptional coefficients
are stored with their sign, so ``l - e1`` is ``(1, -1, 0, ...)``.

Python integers are arbitrary precision, so nothing here can overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from burniat.errors import DimensionError


@dataclass(frozen=True)
class Lattice:
    """Picard lattice of ``P^2`` blown up at ``n`` points."""

    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"number of blown-up points must be a nonnegative int, got {self.n!r}")

    @property
    def rank(self) -> int:
        return self.n + 1

    @property
    def labels(self) -> tuple[str, ...]:
        return ("l",) + tuple(f"e{i}" for i in range(1, self.n + 1))

    def cls(self, coeffs: Iterable[int]) -> "DivisorClass":
        return DivisorClass(tuple(coeffs), self)

    def zero(self) -> "DivisorClass":
        return DivisorClass((0,) * self.rank, self)

    def l(self) -> "DivisorClass":
        return DivisorClass((1,) + (0,) * self.n, self)

    def e(self, i: int) -> "DivisorClass":
        """Exceptional class over the ``i``-th point, 1-based."""
        if not 1 <= i <= self.n:
            raise IndexError(f"e{i} does not exist on a lattice with n={self.n}")
        coeffs = [0] * self.rank
        coeffs[i] = 1
        return DivisorClass(tuple(coeffs), self)

    def basis(self) -> list["DivisorClass"]:
        return [self.l()] + [self.e(i) for i in range(1, self.n + 1)]

    def canonical(self) -> "DivisorClass":
        return canonical(self)

    def gram(self) -> list[list[int]]:
        return [[intersect(a, b) for b in self.basis()] for a in self.basis()]


@dataclass(frozen=True)
class DivisorClass:
    """Immutable integer class; equality is linear equivalence."""

    coeffs: tuple[int, ...]
    lattice: Lattice

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        if len(coeffs) != self.lattice.rank:
            raise DimensionError(
                f"expected {self.lattice.rank} coefficients for n={self.lattice.n}, got {len(coeffs)}"
            )
        if not all(isinstance(c, int) for c in coeffs):
            raise TypeError(f"coefficients must be integers, got {coeffs!r}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        """Coefficient of ``l``."""
        return self.coeffs[0]

    def _check(self, other: "DivisorClass") -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected a DivisorClass, got {type(other).__name__}")
        if other.lattice != self.lattice:
            raise DimensionError(f"rank {self.lattice.rank} vs rank {other.lattice.rank}")

    def __lt__(self, other: "DivisorClass") -> bool:
        # canonical order: lexicographic on the coefficient vector
        self._check(other)
        return self.coeffs < other.coeffs

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.lattice)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.lattice)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs), self.lattice)

    def __mul__(self, k: int) -> "DivisorClass":
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(tuple(k * a for a in self.coeffs), self.lattice)

    __rmul__ = __mul__

    def dot(self, other: "DivisorClass") -> int:
        return intersect(self, other)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        return format_class(self.coeffs)

    def __repr__(self) -> str:
        return f"DivisorClass({format_class(self.coeffs)}, n={self.lattice.n})"


def format_class(coeffs: Sequence[int]) -> str:
    """Render a coefficient vector as e.g. ``2l-e1-e2`` (``0`` for the zero class)."""
    labels = ["l"] + [f"e{i}" for i in range(1, len(coeffs))]
    parts = []
    for c, name in zip(coeffs, labels):
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}{name}")
    if not parts:
        return "0"
    text = "".join(parts)
    return text[1:] if text[0] == "+" else text


def intersect(a: DivisorClass, b: DivisorClass) -> int:
    """Intersection number ``a0*b0 - sum(ai*bi)``."""
    a._check(b)
    x, y = a.coeffs, b.coeffs
    return x[0] * y[0] - sum(p * q for p, q in zip(x[1:], y[1:]))


def canonical(lattice: Lattice) -> DivisorClass:
    """``K = -3l + e1 + ... + en``."""
    return DivisorClass((-3,) + (1,) * lattice.n, lattice)


def rr_chi(d: DivisorClass) -> int:
    """Riemann-Roch Euler characteristic ``1 + (D^2 - D.K)/2`` on a rational surface."""
    k = canonical(d.lattice)
    num = intersect(d, d) - intersect(d, k)
    # D.(D-K) = a(a+3) - sum b(b-1) is always even
    assert num % 2 == 0
    return 1 + num // 2


def arith_genus(d: DivisorClass) -> int:
    """Arithmetic genus by adjunction, ``1 + (D^2 + D.K)/2``."""
    k = canonical(d.lattice)
    num = intersect(d, d) + intersect(d, k)
    assert num % 2 == 0
    return 1 + num // 2


def anticanonical_degree(d: DivisorClass) -> int:
    """``D.(-K)``; the degree of ``D`` in the anticanonical embedding."""
    return -intersect(d, canonical(d.lattice))
