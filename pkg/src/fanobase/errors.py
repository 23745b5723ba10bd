"""Domain errors shared by all calculus modules.

Every error raised on bad mathematical input derives from
:class:`FanobaseError`, so callers (in particular the command line
front end) can map the whole family to a single "domain error" outcome.
"""


class FanobaseError(ValueError):
    """Base class for every domain error raised by this package."""


# ---------------------------------------------------------------- scrolls

class NegativeDegree(FanobaseError):
    """The fiberwise degree h of a class is negative where support data is required."""


class ArityMismatch(FanobaseError):
    """An intersection product received a number of classes different from the dimension."""


class NotRigid(FanobaseError):
    """The candidate fixed component does not have a one-dimensional space of sections."""


class EmptySystem(FanobaseError):
    """The linear system has no effective members."""


class IndexOutOfRange(FanobaseError):
    """A coordinate index is outside 1..n."""


class TooFewSummands(FanobaseError):
    """A sub-scroll needs at least two bundle summands."""


class NegativeTwist(FanobaseError):
    """The smallest twist is negative, so the tautological map is not a morphism onto a scroll."""


# --------------------------------------------------------- ruled surfaces

class SurfaceMismatch(FanobaseError):
    """Two surface classes live on different Hirzebruch surfaces."""


class NotEffectiveShape(FanobaseError):
    """Adjunction genus is only evaluated on classes with non-negative section coefficient."""


class RankMismatch(FanobaseError):
    """A rank-2 scroll was expected."""


# -------------------------------------------------------------- K3 pencil

class NotElephantShape(FanobaseError):
    """The class is not of the normal form (section) + m(fiber) with m >= 2."""


class InvalidM(FanobaseError):
    """The pencil multiplicity m is outside the admissible range."""


class WrongSurface(FanobaseError):
    """The double-cover pullback is only defined for classes on the fourth Hirzebruch surface."""


class NoSection(FanobaseError):
    """Cannot subtract a section from a class with no section summand."""


# --------------------------------------------------- weighted Riemann-Roch

class WrongDimension(FanobaseError):
    """The weighted complete intersection is not a threefold."""


class NonIntegralChi(FanobaseError):
    """The Riemann-Roch value is not an integer for this degree and twist."""


class Inconsistent(FanobaseError):
    """The dimension sequence is not the Hilbert function of any complete-intersection model."""


# ------------------------------------------------------------ double cover

class WrongRank(FanobaseError):
    """Double-cover bookkeeping is only implemented over threefold scrolls (rank 3)."""


# ------------------------------------------------------------------ blowup

class InvalidDegree(FanobaseError):
    """A del Pezzo degree must be a positive integer."""


# -------------------------------------------------------------- classifier

class OutOfRange(FanobaseError):
    """Normal-bundle parameters must satisfy a >= b >= -2."""


class CheckFailure(FanobaseError):
    """A classification check did not hold; carries the failing check record."""

    def __init__(self, check):
        self.check = check
        super().__init__(
            f"check {check.name!r} failed: expected {check.expected!r}, got {check.got!r}"
        )
