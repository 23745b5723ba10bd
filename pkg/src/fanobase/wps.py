"""Hilbert series of weighted complete intersections and Riemann-Roch counts.

All series arithmetic is exact integer convolution on truncated power
series; nothing here ever touches a float.  The three tools are

* :func:`hilbert_coeffs`, the expansion of
  prod(1 - t^e_j) / prod(1 - t^w_i) to a given degree,
* :func:`rr_chi`, the anticanonical Riemann-Roch polynomial
  chi(-kK) = (2k + 1) + k(k+1)(2k+1) * deg / 12 of a Gorenstein Fano
  threefold (chi = h^0 for these classes, by vanishing), and
* :func:`infer_ring`, the greedy generator/relation inference that
  turns a dimension count sequence back into a minimal
  complete-intersection model.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .errors import FanobaseError, Inconsistent, NonIntegralChi, WrongDimension

DEFAULT_TRUNCATION = 24


@dataclass(frozen=True, slots=True)
class WeightedCI:
    """Weights (w_0, ..., w_N) and relation degrees (e_1, ..., e_c) of a weighted complete intersection."""

    weights: tuple
    rel_degrees: tuple = ()

    def __post_init__(self):
        weights = tuple(self.weights)
        rels = tuple(self.rel_degrees)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "rel_degrees", rels)
        if not weights or any(not isinstance(w, int) or w < 1 for w in weights):
            raise FanobaseError(f"weights must be positive integers, got {weights!r}")
        if any(not isinstance(e, int) or e < 2 for e in rels):
            raise FanobaseError(f"relation degrees must be integers >= 2, got {rels!r}")
        if len(rels) >= len(weights):
            raise FanobaseError("need fewer relations than weights (positive dimension)")

    @property
    def dimension(self) -> int:
        return len(self.weights) - 1 - len(self.rel_degrees)

    def amplitude(self) -> int:
        """Sum of weights minus sum of relation degrees; the adjunction twist of -K."""
        return sum(self.weights) - sum(self.rel_degrees)


def _series(gen_degrees, rel_degrees, n_max: int) -> list:
    """Integer expansion of prod(1 - t^e)/prod(1 - t^w) to degree n_max."""
    coeffs = [0] * (n_max + 1)
    coeffs[0] = 1
    for w in gen_degrees:
        for k in range(w, n_max + 1):
            coeffs[k] += coeffs[k - w]
    for e in rel_degrees:
        for k in range(n_max, e - 1, -1):
            coeffs[k] -= coeffs[k - e]
    return coeffs


def hilbert_coeffs(x: WeightedCI, n_max: int = DEFAULT_TRUNCATION) -> list:
    """Graded dimensions of the coordinate ring of ``x`` up to degree n_max."""
    if n_max < 0:
        raise FanobaseError(f"n_max must be non-negative, got {n_max}")
    return _series(x.weights, x.rel_degrees, n_max)


def anticanonical_degree(x: WeightedCI):
    """(-K)^3 of a complete-intersection threefold, as an exact rational.

    For dimension N - c = 3 the degree is amplitude^3 * prod(e) / prod(w).
    Returns the Fraction together with a flag telling whether it is an
    integer >= 1 (the Gorenstein Fano range).
    """
    if x.dimension != 3:
        raise WrongDimension(f"{x} has dimension {x.dimension}, need 3")
    value = Fraction(x.amplitude() ** 3 * prod(x.rel_degrees), prod(x.weights))
    return value, value.denominator == 1 and value >= 1


def rr_chi(degree: int, k: int) -> int:
    """Riemann-Roch value chi(-kK) = (2k+1) + k(k+1)(2k+1)*degree/12.

    Exact integer arithmetic; raises NonIntegralChi when 12 does not
    divide degree * k(k+1)(2k+1) (never for even degree).  For ample
    anticanonical classes higher cohomology vanishes, so this value is
    the section count h^0(-kK).
    """
    numerator = degree * k * (k + 1) * (2 * k + 1)
    if numerator % 12 != 0:
        raise NonIntegralChi(f"degree {degree}, twist {k}: chi is not an integer")
    return (2 * k + 1) + numerator // 12


def infer_ring(seq):
    """Minimal generator and relation degrees reproducing a dimension sequence.

    Degree by degree: a deficit of the candidate series against ``seq``
    is repaired with that many new generators of the current degree, a
    surplus with that many new relations.  The result reproduces ``seq``
    exactly to its full length.  A generator and a relation in the same
    degree cancel in any Hilbert series, so the returned model is the
    minimal one.  Raises Inconsistent when the input cannot be the
    dimension sequence of such a model (leading coefficient not 1, a
    negative entry, or the candidate driven below zero by relations).
    """
    seq = list(seq)
    if len(seq) < 2:
        raise Inconsistent("need the sequence at least through degree 1")
    if seq[0] != 1:
        raise Inconsistent(f"coefficient 0 must be 1, got {seq[0]}")
    if any(v < 0 for v in seq):
        raise Inconsistent("dimension counts cannot be negative")
    n_max = len(seq) - 1
    gens: list = []
    rels: list = []
    for d in range(1, n_max + 1):
        candidate = _series(gens, rels, n_max)
        if candidate[d] < 0:
            raise Inconsistent(
                f"degree {d}: relations drove the model dimension to {candidate[d]}"
            )
        delta = seq[d] - candidate[d]
        if delta > 0:
            gens.extend([d] * delta)
        elif delta < 0:
            rels.extend([d] * (-delta))
    assert _series(gens, rels, n_max) == seq
    return tuple(gens), tuple(rels)
