"""Exact rational scalars and the small amount of linear algebra built on them.

Scalars are :class:`fractions.Fraction`; vectors are tuples of them.  Every
routine here is fraction-exact Gaussian elimination, no pivoting
heuristics, because the matrices involved are at most a few rows wide.
"""
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

from .errors import ParseError

Rational = Fraction


def rational(value):
    """Coerce ``value`` (int, Fraction, or ``"p/q"`` string) to a Fraction.

    Floats are refused: a float silently carries binary rounding into
    quantities that must compare exactly.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {value!r}") from exc
    raise ParseError(f"not a rational: {value!r}")


def format_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vector(values):
    return tuple(rational(v) for v in values)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def scale(c, u):
    return tuple(c * a for a in u)


def matvec(m, v):
    return tuple(dot(row, v) for row in m)


def transpose(m):
    return tuple(zip(*m))


def is_integral(v):
    return all(Fraction(x).denominator == 1 for x in v)


def gcd_rationals(values):
    """Positive generator of the subgroup of Q spanned by ``values`` (0 if all vanish)."""
    values = [Fraction(v) for v in values if v != 0]
    if not values:
        return Fraction(0)
    den = reduce(lcm, (v.denominator for v in values), 1)
    num = reduce(gcd, (abs(int(v * den)) for v in values), 0)
    return Fraction(num, den)


def primitive(v):
    """The primitive integer vector positively proportional to a nonzero rational vector."""
    v = [Fraction(x) for x in v]
    if all(x == 0 for x in v):
        raise ValueError("zero vector has no primitive direction")
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    return tuple(x // g for x in ints)


def ext_gcd(a, b):
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def bezout(values):
    """Coefficients ``c`` with ``sum(c_i * values_i) == gcd(values)``."""
    g, coeffs = 0, []
    for v in values:
        g, x, y = ext_gcd(g, v)
        coeffs = [c * x for c in coeffs] + [y]
    return g, coeffs


def _rref(rows, ncols):
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows, ncols=None):
    rows = list(rows)
    if not rows:
        return 0
    _, pivots = _rref(rows, ncols if ncols is not None else len(rows[0]))
    return len(pivots)


def affine_rank(points):
    """Dimension of the affine hull of a nonempty point set."""
    points = list(points)
    base = points[0]
    return rank([sub(p, base) for p in points[1:]], len(base)) if len(points) > 1 else 0


def det(m):
    m = [[Fraction(x) for x in row] for row in m]
    n = len(m)
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / m[c][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return result


def solve(a, b):
    """Unique solution of ``a x = b`` for square ``a``, or None when singular."""
    n = len(a)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = _rref(aug, n)
    if pivots != list(range(n)):
        return None
    return tuple(m[i][n] for i in range(n))


def inverse(a):
    n = len(a)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    m, pivots = _rref(aug, n)
    if pivots != list(range(n)):
        return None
    return tuple(tuple(m[i][n:]) for i in range(n))


def nullspace(rows, ncols):
    """Basis of the right null space of ``rows`` (a list of length-``ncols`` vectors)."""
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]
    m, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][f]
        basis.append(tuple(v))
    return basis
