"""Exception types shared across the package."""


class SalemnumError(Exception):
    """Base class for all package-specific errors."""


class NotDivisible(SalemnumError):
    """Exact polynomial division left a nonzero remainder."""


class NotSquarefree(SalemnumError):
    """A squarefree polynomial was required but gcd(f, f') is nonconstant."""


class NotMonic(SalemnumError):
    pass


class NotReciprocal(SalemnumError):
    pass


class OddDegree(SalemnumError):
    pass


class NotCoprime(SalemnumError):
    pass


class InadmissibleN(SalemnumError):
    """The free parameter n shares a factor with the tuple product (or n < 2)."""


class UnknownQuadruple(SalemnumError):
    pass


class UnexpectedShape(SalemnumError):
    """A construction outcome fit none of the expected classification cases."""


class SharedRoot(SalemnumError):
    """Two polynomials required to be coprime share a root."""


class IdenticallyZero(SalemnumError):
    """A resultant vanished identically (the inputs share a component)."""


class ModuliNotCoprime(SalemnumError):
    pass


class DegreeMismatch(SalemnumError):
    pass


class DegenerateIndex(SalemnumError):
    """Cyclotomic index too small to have a real counterpart (m < 3)."""


class DataIntegrityError(SalemnumError):
    """A bundled data file failed its checksum."""
