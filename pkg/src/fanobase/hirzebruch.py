"""Divisor classes on Hirzebruch surfaces in the (minimal section, fiber) basis.

The surface Sigma_e is the rank-2 scroll F(e, 0), e >= 0.  A class is
written xi * (minimal section) + fib * (fiber) with the intersection
form xi^2 = -e, xi . fiber = 1, fiber^2 = 0.  The basis change to and
from scroll coordinates is

    (h, f) on F(d1, d2)  <->  (xi, fib) = (h, h*d1 + f) on Sigma_(d1-d2),

and negative-twist rank-2 presentations are normalized to F(e, 0) by
the scroll constructor, so every surface has a unique normal form here.
"""

from dataclasses import dataclass

from .errors import (
    EmptySystem,
    FanobaseError,
    NotEffectiveShape,
    RankMismatch,
    SurfaceMismatch,
)
from .scroll import DivisorClass, Scroll, h0


@dataclass(frozen=True, slots=True)
class SurfaceClass:
    """The class xi*s + fib*f on Sigma_e, with s the minimal section."""

    e: int
    xi: int
    fib: int

    def __post_init__(self):
        if self.e < 0:
            raise FanobaseError(f"surface index must be non-negative, got {self.e}")

    def _same_surface(self, other):
        if self.e != other.e:
            raise SurfaceMismatch(f"classes live on Sigma_{self.e} and Sigma_{other.e}")

    def __add__(self, other):
        self._same_surface(other)
        return SurfaceClass(self.e, self.xi + other.xi, self.fib + other.fib)

    def __sub__(self, other):
        self._same_surface(other)
        return SurfaceClass(self.e, self.xi - other.xi, self.fib - other.fib)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return SurfaceClass(self.e, self.xi * k, self.fib * k)

    __rmul__ = __mul__

    def __str__(self):
        return f"{self.xi} xi + {self.fib} f on Sigma_{self.e}"


def intersect2(c1: SurfaceClass, c2: SurfaceClass) -> int:
    """Intersection pairing -e*xi1*xi2 + xi1*fib2 + xi2*fib1."""
    if c1.e != c2.e:
        raise SurfaceMismatch(f"classes live on Sigma_{c1.e} and Sigma_{c2.e}")
    return -c1.e * c1.xi * c2.xi + c1.xi * c2.fib + c2.xi * c1.fib


def minimal_section(e: int) -> SurfaceClass:
    return SurfaceClass(e, 1, 0)


def canonical_surface_class(e: int) -> SurfaceClass:
    """K = -2*(minimal section) - (e+2)*(fiber)."""
    return SurfaceClass(e, -2, -(e + 2))


def genus(c: SurfaceClass) -> int:
    """Arithmetic genus by adjunction, 1 + c.(c + K)/2.

    Only classes of effective shape (xi >= 0) are accepted; the pairing
    c.(c + K) is always even for integral classes, which is asserted.
    """
    if c.xi < 0:
        raise NotEffectiveShape(f"{c} has negative section coefficient")
    pairing = intersect2(c, c + canonical_surface_class(c.e))
    assert pairing % 2 == 0, "adjunction pairing must be even"
    return 1 + pairing // 2


def from_scroll(s: Scroll, c: DivisorClass) -> SurfaceClass:
    """Basis change from a rank-2 scroll: (h, f) -> (h, h*d1 + f) on Sigma_(d1-d2)."""
    if s.rank != 2:
        raise RankMismatch(f"{s!r} is not a surface")
    d1, d2 = s.twists
    return SurfaceClass(d1 - d2, c.h, c.h * d1 + c.f)


def to_scroll(c: SurfaceClass):
    """Inverse basis change onto the normal form F(e, 0)."""
    return Scroll(c.e, 0), DivisorClass(c.xi, c.fib - c.xi * c.e)


def forced_minimal_decomposition(c: SurfaceClass):
    """Split off the copies of the minimal section fixed in ``|c|``.

    While the running class meets the minimal section negatively, the
    section is a component of every member and one copy is subtracted.
    Returns (mu, residual) with residual . xi >= 0.  The system must be
    non-empty (checked through the scroll basis), otherwise EmptySystem.
    """
    surface, scroll_class = to_scroll(c)
    if c.xi < 0 or h0(surface, scroll_class) == 0:
        raise EmptySystem(f"|{c}| is empty")
    xi = minimal_section(c.e)
    mu = 0
    residual = c
    while intersect2(residual, xi) < 0:
        residual = residual - xi
        mu += 1
    return mu, residual
