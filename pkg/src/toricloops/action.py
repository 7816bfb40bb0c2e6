"""Numerical check of the action-integral formula for Lambda on torus orbits.

In action-angle coordinates over the open orbit the symplectic form is
``sum dmu_k ^ dtheta_k``.  The loop phi_b moves a point with moment value
``mu`` around the orbit ``theta -> theta + t b``; the bounding chain used
here is the cylinder swept by that orbit as the moment value slides along
the segment from a vertex ``v`` (where the orbit collapses to a fixed
point) to ``mu``.  Its area is ``<mu - v, b>``.

Floats are confined to this module; every report carries the exact class
it is compared against.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np
from scipy.integrate import simpson

from . import exact
from .errors import NotDelzant, NotInterior, NotQuantizable
from .invariants import lambda_invariant
from .polytope import centroid, is_delzant, is_quantizable

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class OrbitLoopSpec:
    polytope: object
    b: tuple
    mu: tuple
    target_vertex: int = 0

    def __post_init__(self):
        P = self.polytope
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        object.__setattr__(self, "mu", exact.vector(self.mu))
        if len(self.b) != P.dim or len(self.mu) != P.dim:
            raise ValueError("b and mu must have the polytope dimension")
        if not 0 <= self.target_vertex < len(P.vertices):
            raise ValueError(f"no vertex with index {self.target_vertex}")
        if not is_quantizable(P):
            raise NotQuantizable("some vertex has a non-integer coordinate")
        if not is_delzant(P):
            raise NotDelzant("polytope fails the Delzant condition")
        if not P.contains(self.mu, strict=True):
            raise NotInterior(f"{[str(c) for c in self.mu]} is not an interior point")


@dataclass(frozen=True)
class ActionReport:
    integral_f: float
    chain_area: float
    numeric_lambda_phase: float
    exact_lambda_phase: Fraction
    abs_error: float

    def to_json(self):
        return {
            "integral_f": self.integral_f,
            "chain_area": self.chain_area,
            "numeric_lambda_phase": self.numeric_lambda_phase,
            "exact_lambda_phase": exact.format_rational(self.exact_lambda_phase),
            "abs_error": self.abs_error,
        }


def circular_distance(x, y):
    d = (float(x) - float(y)) % 1.0
    return min(d, 1.0 - d)


def _grid(n_quad):
    if n_quad < 2:
        raise ValueError("n_quad must be at least 2")
    return np.linspace(0.0, 1.0, n_quad + 1)


def orbit_hamiltonian_integral(P, b, mu, n_quad):
    """``int_0^1 f_b(x_t) dt`` along the orbit through a point over ``mu``."""
    t = _grid(n_quad)
    b_arr = np.array(b, dtype=float)
    cm = np.array([float(c) for c in centroid(P)])
    # the torus action moves only the angles, so the action coordinate stays mu
    theta = np.outer(t, b_arr)
    actions = np.broadcast_to(np.array([float(c) for c in mu]), theta.shape)
    f = actions @ b_arr - cm @ b_arr
    return float(simpson(f, x=t))


def cylinder_area(b, mu, vertex, n_quad):
    """Symplectic area of the orbit cylinder over the segment from ``vertex`` to ``mu``."""
    s = _grid(n_quad)
    start = np.array([float(c) for c in vertex])
    end = np.array([float(c) for c in mu])
    path = start + np.outer(s, end - start)
    velocity = np.gradient(path, s, axis=0)
    integrand = velocity @ np.array(b, dtype=float)
    return float(simpson(integrand, x=s))


def verify_orbit_loop(spec, n_quad=64):
    P = spec.polytope
    integral_f = orbit_hamiltonian_integral(P, spec.b, spec.mu, n_quad)
    area = cylinder_area(spec.b, spec.mu, P.vertices[spec.target_vertex], n_quad)
    numeric = (area - integral_f) % 1.0
    exact_phase = lambda_invariant(P, spec.b).value
    return ActionReport(integral_f, area, numeric, exact_phase, circular_distance(numeric, exact_phase))


def verify_point_independence(P, b, mus, n_quad=64, tol=DEFAULT_TOL, target_vertex=0):
    """True when every sampled point reproduces the exact phase within ``tol``."""
    reports = [verify_orbit_loop(OrbitLoopSpec(P, b, mu, target_vertex), n_quad) for mu in mus]
    if any(rep.abs_error >= tol for rep in reports):
        return False
    return all(
        circular_distance(a.numeric_lambda_phase, c.numeric_lambda_phase) < 2 * tol
        for a, c in combinations(reports, 2)
    )


def interior_sample(P, k=3):
    """``k`` distinct interior points: the centroid pulled towards successive vertices."""
    cm = centroid(P)
    points = []
    for i in range(k):
        v = P.vertices[i % len(P.vertices)]
        w = Fraction(1, 2 + i // len(P.vertices))
        points.append(tuple(c + w * (x - c) for c, x in zip(cm, v)))
    return points
