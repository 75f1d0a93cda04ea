"""Exception hierarchy shared by every module of the package."""


class LatticeError(ValueError):
    """Base class for all errors raised by this package."""


class DimensionError(LatticeError):
    """Two classes (or a class and a map) live on lattices of different rank."""


class UnsupportedLatticeError(LatticeError):
    """The operation is only defined on a restricted range of blow-ups."""


class InvalidRootError(LatticeError):
    pass


class PreconditionError(LatticeError):
    pass


class OrbitCapError(LatticeError):
    pass


class SearchFailureError(LatticeError):
    pass


class InconsistentBranchDataError(LatticeError):
    """Cover invariants came out non-integral, so the branch data cannot exist."""


class NotDivisibleError(LatticeError):
    """A branch class that must be 2-divisible is not."""


class InvalidInputError(LatticeError):
    """Malformed user input (point files, point counts, duplicate points)."""
