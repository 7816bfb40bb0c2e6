"""Flag manifold SU(n+1)/T with a character of the maximal torus T.

Matrices live in su(n+1) with Gaussian-rational entries.  The reductive
complement of the Cartan subalgebra is the space of zero-diagonal
matrices, so taking the h-component is reading off the diagonal.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from . import exact
from .errors import NotDiagonal


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", exact.rational(self.re))
        object.__setattr__(self, "im", exact.rational(self.im))

    def __add__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = _coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re or self.im)

    def __repr__(self):
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


I = GaussianRational(0, 1)
ZERO = GaussianRational()


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(exact.rational(x), 0)


def _as_matrix(rows):
    return tuple(tuple(_coerce(x) for x in row) for row in rows)


class AntiHermitian:
    """Traceless anti-Hermitian matrix, an element of su(n+1)."""

    __slots__ = ("entries",)

    def __init__(self, rows):
        m = _as_matrix(rows)
        size = len(m)
        if any(len(row) != size for row in m):
            raise ValueError("matrix must be square")
        for j in range(size):
            for k in range(size):
                if m[j][k] != -m[k][j].conjugate():
                    raise ValueError(f"entry ({j},{k}) violates A^H = -A")
        if sum((m[j][j] for j in range(size)), ZERO):
            raise ValueError("matrix is not traceless")
        self.entries = m

    @classmethod
    def diagonal(cls, thetas):
        """``diag(i theta_0, ..., i theta_n)``."""
        n = len(thetas)
        return cls([[GaussianRational(0, thetas[j]) if j == k else ZERO for k in range(n)] for j in range(n)])

    @property
    def size(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, AntiHermitian) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"AntiHermitian({[list(r) for r in self.entries]})"

    def __add__(self, other):
        return AntiHermitian([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return AntiHermitian([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def scaled(self, c):
        c = exact.rational(c)
        return AntiHermitian([[a * c for a in r] for r in self.entries])

    def is_diagonal(self):
        return all(not self.entries[j][k] for j in range(self.size) for k in range(self.size) if j != k)

    def is_off_diagonal(self):
        return all(not self.entries[j][j] for j in range(self.size))


def _matmul(a, b):
    n = len(a)
    return [[sum((a[j][l] * b[l][k] for l in range(n)), ZERO) for k in range(n)] for j in range(n)]


def commutator(A, B):
    ab = _matmul(A.entries, B.entries)
    ba = _matmul(B.entries, A.entries)
    return AntiHermitian([[x - y for x, y in zip(r, s)] for r, s in zip(ab, ba)])


@dataclass(frozen=True)
class Weight:
    """Integer weight of the character ``diag(e^{i t_k}) -> e^{i sum lam_k t_k}``."""

    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))

    @property
    def canonical(self):
        """Representative with a zero last entry; characters on SU(n+1) ignore constant shifts."""
        last = self.lam[-1]
        return tuple(x - last for x in self.lam)


def h_component(A):
    n = A.size
    return AntiHermitian([[A.entries[j][k] if j == k else ZERO for k in range(n)] for j in range(n)])


def psi_prime(w, H):
    """Derivative of the character at the diagonal matrix ``H = diag(i theta_k)``: ``i sum lam_k theta_k``."""
    if not H.is_diagonal():
        raise NotDiagonal("psi_prime is defined on the Cartan subalgebra only")
    lam = w.lam if isinstance(w, Weight) else Weight(w).lam
    if len(lam) != H.size:
        raise ValueError(f"weight of length {len(lam)} for a {H.size}x{H.size} matrix")
    return GaussianRational(0, sum((l * H.entries[k][k].im for k, l in enumerate(lam)), Fraction(0)))


def f_A_at_identity(w, A):
    return psi_prime(w, h_component(A))


def presymplectic_form(w, A, B):
    """``omega(X_A, X_B) = -f_{[A,B]}`` at the base coset."""
    return -f_A_at_identity(w, commutator(A, B))


def kirillov_value(w, A, B):
    """Rational c with ``(i / 2 pi) Psi'([A,B]_0) = c / pi``.

    The value is returned as the coefficient of ``1/pi`` so that no
    floating point pi is involved.
    """
    value = I * f_A_at_identity(w, commutator(A, B))
    assert value.im == 0
    return value.re / 2


def center_image_count(n, w):
    """``#Psi(Z(SU(n+1))) = (n+1) / gcd(n+1, sum lam)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lam = w.lam if isinstance(w, Weight) else Weight(w).lam
    if len(lam) != n + 1:
        raise ValueError(f"weight must have n+1 = {n + 1} entries")
    return (n + 1) // gcd(n + 1, sum(lam))


def su_basis(n):
    """Rational basis of su(n+1): off-diagonal pairs then traceless diagonals."""
    size = n + 1
    basis = []
    for j in range(size):
        for k in range(j + 1, size):
            real = [[ZERO] * size for _ in range(size)]
            real[j][k] = GaussianRational(1)
            real[k][j] = GaussianRational(-1)
            imag = [[ZERO] * size for _ in range(size)]
            imag[j][k] = I
            imag[k][j] = I
            basis.append(AntiHermitian(real))
            basis.append(AntiHermitian(imag))
    for j in range(n):
        thetas = [Fraction(0)] * size
        thetas[j], thetas[j + 1] = Fraction(1), Fraction(-1)
        basis.append(AntiHermitian.diagonal(thetas))
    return basis


def conjugate_by_torus(A, phases):
    """Entries of ``t A t^{-1}`` for ``t = diag(exp(2 pi i p_k))`` with rational phases p_k.

    Each entry is returned symbolically as ``(coefficient, phase)`` meaning
    ``coefficient * exp(2 pi i phase)``, phase reduced into [0, 1).
    """
    phases = [exact.rational(p) for p in phases]
    out = []
    for j, row in enumerate(A.entries):
        out_row = []
        for k, a in enumerate(row):
            p = phases[j] - phases[k]
            out_row.append((a, p - (p.numerator // p.denominator)))
        out.append(out_row)
    return out


def is_ad_invariant_complement(n=2, denominators=(1, 2, 3, 4)):
    """Check that torus conjugation keeps zero-diagonal matrices zero-diagonal.

    Runs over the off-diagonal basis of su(n+1) and all diagonal unitaries
    whose phases are multiples of ``1/d`` for each listed d.  Diagonal
    matrices are also checked to be fixed.
    """
    basis = su_basis(n)
    size = n + 1
    for d in denominators:
        for phases in product([Fraction(a, d) for a in range(d)], repeat=size):
            for A in basis:
                conj = conjugate_by_torus(A, phases)
                for j in range(size):
                    coef, phase = conj[j][j]
                    if phase != 0 or coef != A.entries[j][j]:
                        return False
                if A.is_diagonal():
                    if any(conj[j][k][0] for j in range(size) for k in range(size) if j != k):
                        return False
    return True
