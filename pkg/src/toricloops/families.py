"""Projective spaces, Hirzebruch surfaces and the one point blow-up of CP^n.

Constructors emit H-representations so that every polytope built here
goes through vertex enumeration.  The ``closed_form_*`` functions are
literal evaluations of the known mass-center formulas and exist only to
be compared against :func:`toricloops.polytope.centroid`.
"""
from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .errors import InvalidParams
from .polytope import HalfSpace, build_polytope


def _unit(n, k, sign=1):
    return tuple(sign * int(i == k) for i in range(n))


@dataclass(frozen=True)
class HirzebruchParams:
    r: int
    tau: Fraction
    lam: Fraction

    def __post_init__(self):
        if isinstance(self.r, bool) or int(self.r) != self.r or self.r <= 0:
            raise InvalidParams(f"r must be a positive integer, got {self.r!r}")
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "tau", exact.rational(self.tau))
        object.__setattr__(self, "lam", exact.rational(self.lam))
        if self.tau <= 0 or self.lam <= 0:
            raise InvalidParams("tau and lam must be positive")
        if self.sigma <= 0:
            raise InvalidParams(f"sigma = tau - r*lam = {self.sigma} must be positive")

    @property
    def sigma(self):
        return self.tau - self.r * self.lam


@dataclass(frozen=True)
class BlowupParams:
    n: int
    tau: int
    lam: int

    def __post_init__(self):
        for name in ("n", "tau", "lam"):
            value = getattr(self, name)
            if isinstance(value, bool) or Fraction(value).denominator != 1:
                raise InvalidParams(f"{name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.n < 2:
            raise InvalidParams("n must be at least 2")
        if self.tau <= 0 or self.lam <= 0:
            raise InvalidParams("tau and lam must be positive")
        if self.sigma <= 0:
            raise InvalidParams(f"sigma = tau - lam = {self.sigma} must be positive")

    @property
    def sigma(self):
        return self.tau - self.lam


def simplex(n, scale=1):
    """``{x : sum(x) <= scale, x_i >= 0}``, whose toric manifold is CP^n."""
    scale = exact.rational(scale)
    if n < 1:
        raise InvalidParams("n must be at least 1")
    if scale <= 0:
        raise InvalidParams("scale must be positive")
    halfspaces = [HalfSpace(_unit(n, k, -1), 0) for k in range(n)]
    halfspaces.append(HalfSpace((1,) * n, scale))
    return build_polytope(n, halfspaces)


def hirzebruch(p):
    """Trapezoid with vertices (0,0), (0,lam), (tau,0), (sigma,lam)."""
    return build_polytope(
        2,
        [
            HalfSpace((-1, 0), 0),
            HalfSpace((0, -1), 0),
            HalfSpace((0, 1), p.lam),
            HalfSpace((1, p.r), p.tau),
        ],
    )


def blowup_cpn(p):
    """Simplex of size tau truncated by ``x_n <= lam``."""
    n = p.n
    halfspaces = [HalfSpace(_unit(n, k, -1), 0) for k in range(n)]
    halfspaces.append(HalfSpace((1,) * n, p.tau))
    halfspaces.append(HalfSpace(_unit(n, n - 1), p.lam))
    return build_polytope(n, halfspaces)


def closed_form_cm_hirzebruch(p):
    r, tau, lam = p.r, p.tau, p.lam
    den = 3 * (2 * tau - r * lam)
    return (
        (3 * tau**2 - 3 * r * tau * lam + r**2 * lam**2) / den,
        (3 * lam * tau - 2 * r * lam**2) / den,
    )


def closed_form_cm_blowup(p):
    n, tau, lam, sigma = p.n, Fraction(p.tau), Fraction(p.lam), Fraction(p.sigma)
    den = tau**n - sigma**n
    common = (tau ** (n + 1) - sigma ** (n + 1)) / (n + 1)
    cm = [common / den] * n
    cm[-1] = (common - lam * sigma**n) / den
    return tuple(cm)


def mass_linear_pairing_blowup(p, b_n):
    """``<Cm, b>`` for any mass-linear b, which depends only on its last entry."""
    tau, lam, sigma = Fraction(p.tau), Fraction(p.lam), Fraction(p.sigma)
    n = p.n
    return (tau ** (n + 1) - sigma ** (n + 1) - lam * sigma**n) / (tau**n - sigma**n) * b_n


def is_mass_linear_blowup(n, b):
    return n * b[-1] == sum(b[:-1])


def is_mass_linear_hirzebruch(r, b):
    return r * b[0] == 2 * b[1]

