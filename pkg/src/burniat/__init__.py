"""Exact lattice replay for bidouble planes with K^2 = 4 over the quartic del Pezzo surface."""
from burniat.checks import axiom_ledger, run_all
from burniat.lattice import DivisorClass, Lattice, arith_genus, canonical, intersect, rr_chi
from burniat.reports import CheckReport

__all__ = [
    "CheckReport",
    "DivisorClass",
    "Lattice",
    "arith_genus",
    "axiom_ledger",
    "canonical",
    "intersect",
    "rr_chi",
    "run_all",
]
