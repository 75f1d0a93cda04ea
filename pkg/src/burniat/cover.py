"""Invariants of double and bidouble covers, and class arithmetic on the quadruple cover.

On the covering surface ``S`` of a del Pezzo surface ``Sigma`` with
``phi^*(-K_Sigma) = 2 K_S`` every class we need is a rational multiple of a
pullback, so an :class:`SClass` stores ``v`` with the class equal to
``phi^*(v)``; ``v`` has half-integer coordinates (``E_i = phi^*(e_i)/2`` is
``v = e_i / 2``).  Pullback multiplies intersection numbers by ``deg phi = 4``.

Order-2 torsion classes ``eta_1, eta_2, eta_3`` are carried as a formal tag in
``(Z/2)^3``; they never change an intersection number.

The bidouble-cover formulas used below are the standard ones for a smooth
``(Z/2)^2``-cover with branch divisors ``D_1, D_2, D_3``:

    2 K_Y = psi^*(2 K + D),  chi(O_Y) = 4 chi(O) + 1/2 sum L_i (K + L_i),
    p_g(Y) = p_g + sum h^0(K + L_i).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from burniat.errors import DimensionError, InconsistentBranchDataError, NotDivisibleError
from burniat.lattice import DivisorClass, Lattice, canonical, intersect
from burniat.linsys import h0

TORSION_NAMES = ("eta1", "eta2", "eta3")
PULLBACK_DEGREE = 4


def _half_int(x) -> Fraction:
    f = Fraction(x)
    if (2 * f).denominator != 1:
        raise ValueError(f"{x} is not a half-integer")
    return f


@dataclass(frozen=True)
class SClass:
    half_vec: tuple[Fraction, ...]
    lattice: Lattice
    torsion: tuple[int, int, int] = (0, 0, 0)

    def __post_init__(self):
        vec = tuple(_half_int(x) for x in self.half_vec)
        if len(vec) != self.lattice.rank:
            raise DimensionError(f"expected {self.lattice.rank} coordinates, got {len(vec)}")
        tors = tuple(int(t) % 2 for t in self.torsion)
        if len(tors) != len(TORSION_NAMES):
            raise ValueError("torsion tag must have three components")
        object.__setattr__(self, "half_vec", vec)
        object.__setattr__(self, "torsion", tors)

    @classmethod
    def pullback(cls, d: DivisorClass) -> "SClass":
        """``phi^*(d)``."""
        return cls(tuple(Fraction(c) for c in d.coeffs), d.lattice)

    @classmethod
    def half_pullback(cls, d: DivisorClass) -> "SClass":
        """``phi^*(d) / 2``, e.g. the reduced curve under a doubled line."""
        return cls(tuple(Fraction(c, 2) for c in d.coeffs), d.lattice)

    @classmethod
    def canonical(cls, lattice: Lattice) -> "SClass":
        """``K_S = phi^*(-K_Sigma) / 2``."""
        return cls.half_pullback(-canonical(lattice))

    @classmethod
    def torsion_class(cls, lattice: Lattice, i: int) -> "SClass":
        """The formal 2-torsion generator ``eta_i``, ``i`` in 1..3."""
        tag = [0, 0, 0]
        tag[i - 1] = 1
        return cls((Fraction(0),) * lattice.rank, lattice, tuple(tag))

    @classmethod
    def zero(cls, lattice: Lattice) -> "SClass":
        return cls((Fraction(0),) * lattice.rank, lattice)

    def _check(self, other: "SClass") -> None:
        if not isinstance(other, SClass):
            raise TypeError(f"expected an SClass, got {type(other).__name__}")
        if other.lattice != self.lattice:
            raise DimensionError(f"rank {self.lattice.rank} vs rank {other.lattice.rank}")

    def __add__(self, other: "SClass") -> "SClass":
        self._check(other)
        return SClass(
            tuple(a + b for a, b in zip(self.half_vec, other.half_vec)),
            self.lattice,
            tuple(a + b for a, b in zip(self.torsion, other.torsion)),
        )

    def __neg__(self) -> "SClass":
        # -eta = eta for 2-torsion
        return SClass(tuple(-a for a in self.half_vec), self.lattice, self.torsion)

    def __sub__(self, other: "SClass") -> "SClass":
        return self + (-other)

    def __mul__(self, k: int) -> "SClass":
        if not isinstance(k, int):
            return NotImplemented
        return SClass(tuple(k * a for a in self.half_vec), self.lattice, tuple(k * t for t in self.torsion))

    __rmul__ = __mul__

    def dot(self, other: "SClass") -> int:
        self._check(other)
        x, y = self.half_vec, other.half_vec
        form = x[0] * y[0] - sum(p * q for p, q in zip(x[1:], y[1:]))
        value = PULLBACK_DEGREE * form
        if value.denominator != 1:
            raise InconsistentBranchDataError(f"non-integral intersection {value}")
        return int(value)

    def numerically_equal(self, other: "SClass") -> bool:
        self._check(other)
        return self.half_vec == other.half_vec

    def base_class(self) -> DivisorClass:
        """``v`` with ``self = phi^*(v)``; fails unless ``v`` is integral."""
        if any(x.denominator != 1 for x in self.half_vec):
            raise NotDivisibleError(f"{self} is not the pullback of an integral class")
        return DivisorClass(tuple(int(x) for x in self.half_vec), self.lattice)

    def __str__(self) -> str:
        vec = ", ".join(str(x) for x in self.half_vec)
        tors = "+".join(n for n, t in zip(TORSION_NAMES, self.torsion) if t)
        return f"phi*({vec})" + (f" + {tors}" if tors else "")


def sclass_chi(d: SClass) -> int:
    """``chi(O_S(D)) = 1 + (D^2 - D.K_S)/2`` for ``chi(O_S) = 1``; torsion is ignored."""
    k = SClass.canonical(d.lattice)
    num = d.dot(d) - d.dot(k)
    if num % 2:
        raise InconsistentBranchDataError(f"D(D-K) = {num} is odd for D = {d}")
    return 1 + num // 2


def sclass_genus(d: SClass) -> int:
    """Arithmetic genus ``1 + (D^2 + D.K_S)/2``."""
    k = SClass.canonical(d.lattice)
    num = d.dot(d) + d.dot(k)
    if num % 2:
        raise InconsistentBranchDataError(f"D(D+K) = {num} is odd for D = {d}")
    return 1 + num // 2


@dataclass(frozen=True)
class CoverInvariants:
    """Numerical invariants of a cover.

    For a double cover ``pg_lower``/``q_lower`` are lower bounds (``q_lower``
    floored at 0).  For a bidouble cover over the del Pezzo lattice ``h^0`` is
    exact, ``exact`` is set and both are the actual values, with
    ``q = p_g - chi + 1`` reported as computed.
    """

    K2: int
    chi: int
    pg_lower: int
    q_lower: int
    exact: bool = False


def _integral_chi(value: Fraction) -> int:
    if value.denominator != 1:
        raise InconsistentBranchDataError(f"chi(O_Y) = {value} is not an integer")
    return int(value)


def double_cover(base_chi: int, K: SClass, L: SClass, h0_KplusL_lower: int) -> CoverInvariants:
    """Invariants of the double cover branched on a divisor ``B = 2L`` of ``S``.

    ``p_g(S) = 0`` is assumed, so ``p_g(Y) >= h0_KplusL_lower``.
    """
    KL = K + L
    K2 = 2 * KL.dot(KL)
    chi = _integral_chi(2 * base_chi + Fraction(L.dot(KL), 2))
    pg = h0_KplusL_lower
    return CoverInvariants(K2=K2, chi=chi, pg_lower=pg, q_lower=max(0, pg - chi + 1))


def pg_lower_via_pullback(aux: DivisorClass, extra: Iterable[SClass] = ()) -> int:
    """Lower bound for ``h^0(phi^*(aux) + sum(extra))`` with effective ``extra``.

    Sections of ``aux`` pull back injectively and adding effective curves
    only adds sections, so ``h^0(aux)`` on the base is a lower bound.
    """
    for x in extra:
        if x.lattice != aux.lattice:
            raise DimensionError("extra curves live on a different lattice")
    return h0(aux).value


def _halve(d: DivisorClass) -> DivisorClass:
    if any(c % 2 for c in d.coeffs):
        raise NotDivisibleError(f"{d} is not divisible by 2")
    return DivisorClass(tuple(c // 2 for c in d.coeffs), d.lattice)


def bidouble_solve(D1: DivisorClass, D2: DivisorClass, D3: DivisorClass):
    """``L1, L2, L3`` with ``2 L1 = D2 + D3``, ``2 L2 = D1 + D3``, ``L3 = L1 + L2 - D3``."""
    L1 = _halve(D2 + D3)
    L2 = _halve(D1 + D3)
    L3 = L1 + L2 - D3
    return L1, L2, L3


def bidouble_invariants(D1: DivisorClass, D2: DivisorClass, D3: DivisorClass) -> CoverInvariants:
    """``K^2``, ``chi``, ``p_g`` and ``q`` of the bidouble cover of a rational surface.

    ``chi(O) = 1`` and ``p_g = 0`` for the base; ``h^0`` uses the del Pezzo
    peeling, so the base lattice must be ``n = 5``.
    """
    Ls = bidouble_solve(D1, D2, D3)
    K = canonical(D1.lattice)
    twice_k = 2 * K + D1 + D2 + D3
    K2 = intersect(twice_k, twice_k)
    chi = _integral_chi(4 + Fraction(sum(intersect(L, K + L) for L in Ls), 2))
    pg = sum(h0(K + L).value for L in Ls)
    return CoverInvariants(K2=K2, chi=chi, pg_lower=pg, q_lower=pg - chi + 1, exact=True)


def cover_sum(classes: Sequence[SClass]) -> SClass:
    if not classes:
        raise ValueError("empty sum has no lattice")
    total = classes[0]
    for c in classes[1:]:
        total = total + c
    return total
