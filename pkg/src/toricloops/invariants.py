"""Homotopy invariants of the circle loops ``phi_b`` of a toric manifold.

The U(1)-valued invariant is kept exactly as an element of Q/Z: the
class ``q`` stands for ``exp(2 pi i q)``.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import lcm

from . import exact
from .errors import NonGenericVector, NotDelzant, NotQuantizable, PointOutsidePolytope
from .polytope import (
    centroid,
    delzant_defects,
    is_quantizable,
    minimal_rescale,
    origin_vertex,
    vertex_frames,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class CircleClass:
    """A rational point of R/Z, normalized into [0, 1)."""

    value: Fraction

    def __post_init__(self):
        q = exact.rational(self.value)
        object.__setattr__(self, "value", q - (q.numerator // q.denominator))

    def __add__(self, other):
        return CircleClass(self.value + other.value)

    def __neg__(self):
        return CircleClass(-self.value)

    def __sub__(self, other):
        return CircleClass(self.value - other.value)

    def __mul__(self, k):
        return CircleClass(self.value * int(k))

    __rmul__ = __mul__

    @property
    def order(self):
        return self.value.denominator

    @property
    def is_trivial(self):
        return self.value == 0

    def to_json(self):
        return {"num": self.value.numerator, "den": self.value.denominator}

    def __str__(self):
        return exact.format_rational(self.value)


def _lattice(b, dim):
    b = tuple(int(x) for x in b)
    if len(b) != dim:
        raise ValueError(f"lattice vector {b} has length {len(b)}, expected {dim}")
    return b


def _require_quantizable(P):
    if not is_quantizable(P):
        raise NotQuantizable("some vertex has a non-integer coordinate")


def normalized_hamiltonian(P, b, mu):
    """Mean-zero Hamiltonian ``<mu, b> - <Cm, b>`` of the loop phi_b at moment value mu."""
    b = _lattice(b, P.dim)
    mu = exact.vector(mu)
    if not P.contains(mu):
        raise PointOutsidePolytope(f"{[str(c) for c in mu]} is not in the polytope")
    return exact.dot(mu, b) - exact.dot(centroid(P), b)


def mass_pairing(P, b):
    return exact.dot(centroid(P), _lattice(b, P.dim))


def lambda_invariant(P, b):
    """Lambda(phi_b) = exp(2 pi i <Cm, b>) for quantizable P."""
    _require_quantizable(P)
    return CircleClass(mass_pairing(P, b))


def normalized_centroid(P):
    """Centroid of the translate of P that puts its lex-smallest vertex at the origin."""
    return exact.sub(centroid(P), origin_vertex(P))


def lambda_rescaled(P, b):
    """``(<Cm', b>/r mod 1, r)`` for the origin-normalized translate P' and r from minimal_rescale.

    This is the invariant computed on the quantizable polytope P'/r.
    """
    b = _lattice(b, P.dim)
    r = minimal_rescale(P)
    return CircleClass(exact.dot(normalized_centroid(P), b) / r), r


def distinguishable(P, b, b2):
    """True when the mass-center test separates [phi_b] from [phi_b2].

    For quantizable P the test is ``<Cm, b - b2>`` not in Z; otherwise
    ``<Cm', b - b2>`` not in rZ for the origin-normalized centroid and
    r = minimal_rescale(P).  A False answer is inconclusive.
    """
    diff = exact.sub(_lattice(b, P.dim), _lattice(b2, P.dim))
    if is_quantizable(P):
        return exact.dot(centroid(P), diff).denominator != 1
    r = minimal_rescale(P)
    return (exact.dot(normalized_centroid(P), diff) / r).denominator != 1


def enumerate_distinct_classes(P):
    """Lattice vectors whose loops have pairwise distinct Lambda.

    With ``Cm = (r_1/r, ..., r_n/r)`` over the least common denominator,
    choose b* by Bezout so that ``<(r_1..r_n), b*> = g mod r`` with
    ``g = gcd(r_1, ..., r_n, r)``; the family is ``j * b*`` for
    ``j = 0 .. r/g - 1``.
    """
    _require_quantizable(P)
    cm = centroid(P)
    r = reduce(lcm, (c.denominator for c in cm), 1)
    nums = [int(c * r) for c in cm]
    g, coeffs = exact.bezout(nums + [r])
    if g != 1:
        log.warning("gcd(r_1..r_n, r) = %d; returning %d of %d classes", g, r // g, r)
    base = tuple(coeffs[: P.dim])
    return [tuple(j * x for x in base) for j in range(r // g)]


def lambda_is_homomorphism_witness(P, b, b2):
    """``(Lambda(b + b2), Lambda(b) + Lambda(b2))``; the two must agree."""
    b = _lattice(b, P.dim)
    b2 = _lattice(b2, P.dim)
    summed = tuple(x + y for x, y in zip(b, b2))
    return lambda_invariant(P, summed), lambda_invariant(P, b) + lambda_invariant(P, b2)


@dataclass(frozen=True)
class FixedPointRecord:
    vertex: tuple
    weights: tuple
    phase: CircleClass
    weight_product: int

    def to_json(self):
        return {
            "vertex": [exact.format_rational(c) for c in self.vertex],
            "weights": list(self.weights),
            "phase": self.phase.to_json(),
            "weight_product": self.weight_product,
        }


@dataclass(frozen=True)
class LocalizationReport:
    records: tuple
    sum_inverse_products: Fraction
    phases_constant: bool
    matches_lambda: bool
    lambda_class: CircleClass

    def to_json(self):
        return {
            "fixed_points": [rec.to_json() for rec in self.records],
            "sum_inverse_products": exact.format_rational(self.sum_inverse_products),
            "phases_constant": self.phases_constant,
            "matches_lambda": self.matches_lambda,
            "lambda": self.lambda_class.to_json(),
        }


def localization_check(P, b):
    """Fixed-point data of the localization formula for ``exp(2 pi i (omega - f))``.

    At each vertex q the isotropy weights are ``<e, b>`` over the inward
    primitive edge generators e, and the phase is ``-f_b(q) mod 1``.
    """
    _require_quantizable(P)
    if delzant_defects(P):
        raise NotDelzant(f"Delzant condition fails at vertices {delzant_defects(P)}")
    b = _lattice(b, P.dim)
    cm = centroid(P)
    lam = CircleClass(exact.dot(cm, b))
    records = []
    total = Fraction(0)
    for frame in vertex_frames(P):
        weights = tuple(exact.dot(e, b) for e in frame.edges)
        for e, m in zip(frame.edges, weights):
            if m == 0:
                raise NonGenericVector(frame.vertex, e)
        weights = tuple(int(m) for m in weights)
        prod = reduce(lambda x, y: x * y, weights, 1)
        phase = CircleClass(exact.dot(cm, b) - exact.dot(frame.vertex, b))
        records.append(FixedPointRecord(frame.vertex, weights, phase, prod))
        total += Fraction(1, prod)
    phases_constant = len({rec.phase for rec in records}) == 1
    return LocalizationReport(
        tuple(records),
        total,
        phases_constant,
        phases_constant and records[0].phase == lam,
        lam,
    )
