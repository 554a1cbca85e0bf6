"""Exception hierarchy shared by every module of the package."""


class LatticeVOAError(Exception):
    """Base class for all errors raised by lattice_voa."""


class ParseError(LatticeVOAError):
    """Malformed lattice input (not JSON, not a square integer matrix)."""


class ValidationError(LatticeVOAError):
    """The Gram matrix does not describe a positive-definite even lattice."""


class NotSymmetric(ValidationError):
    pass


class NotEven(ValidationError):
    pass


class NotPositiveDefinite(ValidationError):
    pass


class DimensionMismatch(LatticeVOAError):
    pass


class NotInDualLattice(LatticeVOAError):
    pass


class RankTooLarge(LatticeVOAError):
    pass


class NoIntertwiner(LatticeVOAError):
    pass


class NonUniqueSolution(LatticeVOAError):
    pass


class UnknownLabel(LatticeVOAError):
    pass


class ModeParityMismatch(LatticeVOAError):
    """A half-integer mode applied to an untwisted vector or vice versa."""


class InhomogeneousInput(LatticeVOAError):
    pass


class WindowTooSmall(LatticeVOAError):
    pass
