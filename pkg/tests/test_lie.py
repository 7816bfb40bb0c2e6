import cmath
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from toricloops.errors import NotDiagonal
from toricloops.lie import (
    I,
    ZERO,
    AntiHermitian,
    GaussianRational as G,
    Weight,
    center_image_count,
    commutator,
    conjugate_by_torus,
    f_A_at_identity,
    h_component,
    is_ad_invariant_complement,
    kirillov_value,
    presymplectic_form,
    psi_prime,
    su_basis,
)


def su2_pair(c, d):
    C = AntiHermitian([[0, c], [-c, 0]])
    D = AntiHermitian([[ZERO, G(0, d)], [G(0, d), ZERO]])
    return C, D


def random_su(rng, n):
    A = None
    for B in su_basis(n):
        term = B.scaled(F(rng.randint(-6, 6), rng.randint(1, 4)))
        A = term if A is None else A + term
    return A


def test_gaussian_arithmetic():
    z = G(1, 2) * G(3, -1)
    assert z == G(5, 5)
    assert I * I == G(-1, 0)
    assert (G(1, 1) - 1) == G(0, 1)


def test_anti_hermitian_validation():
    with pytest.raises(ValueError):
        AntiHermitian([[0, 1], [1, 0]])
    with pytest.raises(ValueError):
        AntiHermitian([[I, 0], [0, I]])


def test_h_component():
    A = AntiHermitian.diagonal([1, -1])
    assert h_component(A) == A
    C, D = su2_pair(1, 1)
    assert h_component(C) == AntiHermitian.diagonal([0, 0])
    assert h_component(commutator(C, D)) == AntiHermitian.diagonal([2, -2])


@pytest.mark.parametrize("c, d", [(1, 1), (F(2, 3), F(-5, 7)), (3, 4)])
def test_su2_golden(c, d):
    C, D = su2_pair(c, d)
    comm = commutator(C, D)
    assert comm == AntiHermitian.diagonal([2 * c * d, -2 * c * d])
    w = Weight((1, 0))
    assert f_A_at_identity(w, comm) == G(0, 2 * c * d)
    assert presymplectic_form(w, C, D) == G(0, -2 * c * d)
    # coefficient of 1/pi
    assert kirillov_value(w, C, D) == -c * d


def test_psi_prime():
    a = F(5, 3)
    assert psi_prime(Weight((1, 0)), AntiHermitian.diagonal([a, -a])) == G(0, a)
    assert psi_prime(Weight((1, 0)), AntiHermitian.diagonal([0, 0])) == ZERO
    assert psi_prime(Weight((0, 0, 0)), AntiHermitian.diagonal([1, 2, -3])) == ZERO
    C, _ = su2_pair(1, 1)
    with pytest.raises(NotDiagonal):
        psi_prime(Weight((1, 0)), C)


def test_weight_shift_does_not_change_psi():
    H = AntiHermitian.diagonal([F(1, 2), 3, F(-7, 2)])
    assert psi_prime(Weight((2, 5, 1)), H) == psi_prime(Weight(Weight((2, 5, 1)).canonical), H)


def test_f_zero_on_complement():
    for A in su_basis(3):
        if not A.is_diagonal():
            assert f_A_at_identity(Weight((1, -2, 0, 4)), A) == ZERO


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_form_antisymmetric_bilinear(seed):
    rng = random.Random(seed)
    w = Weight(tuple(rng.randint(-4, 4) for _ in range(3)))
    A, B, C = (random_su(rng, 2) for _ in range(3))
    k = F(rng.randint(-5, 5), rng.randint(1, 5))
    assert presymplectic_form(w, A, B) == -presymplectic_form(w, B, A)
    assert presymplectic_form(w, A, A) == ZERO
    assert presymplectic_form(w, A.scaled(k), B) == presymplectic_form(w, A, B) * k
    assert presymplectic_form(w, A + C, B) == presymplectic_form(w, A, B) + presymplectic_form(w, C, B)
    assert presymplectic_form(w, A, B).re == 0


def test_scaling_by_three():
    C, D = su2_pair(1, 1)
    w = Weight((1, 0))
    assert presymplectic_form(w, C.scaled(3), D) == presymplectic_form(w, C, D) * 3


def test_torus_bracket_has_no_cartan_part():
    Hd = AntiHermitian.diagonal([1, F(1, 2), F(-3, 2)])
    for A in su_basis(2):
        if A.is_off_diagonal():
            assert h_component(commutator(Hd, A)).is_off_diagonal()
            assert f_A_at_identity(Weight((3, 1, 0)), commutator(Hd, A)) == ZERO


def test_ad_invariance():
    assert is_ad_invariant_complement(1)
    assert is_ad_invariant_complement(2)


def test_conjugation_n1_basis():
    for A in su_basis(1)[:2]:
        conj = conjugate_by_torus(A, [F(1, 3), F(2, 3)])
        assert conj[0][0] == (ZERO, 0) and conj[1][1] == (ZERO, 0)
        assert conj[0][1][1] == F(2, 3)


def test_diagonal_fixed_by_conjugation():
    A = AntiHermitian.diagonal([1, -1])
    conj = conjugate_by_torus(A, [F(1, 5), F(3, 5)])
    assert [conj[j][j] for j in range(2)] == [(A.entries[0][0], 0), (A.entries[1][1], 0)]
    assert not conj[0][1][0] and not conj[1][0][0]


def brute_center_count(n, lam):
    s = sum(lam)
    values = {cmath.exp(2j * cmath.pi * k * s / (n + 1)) for k in range(n + 1)}
    return len({(round(z.real, 9) + 0.0, round(z.imag, 9) + 0.0) for z in values})


def test_center_image_count():
    assert center_image_count(1, Weight((1, 0))) == 2
    assert center_image_count(2, Weight((1, 0, 0))) == 3
    for n in range(1, 7):
        assert center_image_count(n, Weight((0,) * (n + 1))) == 1


def test_center_image_count_brute_force():
    rng = random.Random(5)
    for n in range(1, 7):
        for _ in range(20):
            lam = tuple(rng.randint(-10, 10) for _ in range(n + 1))
            k = center_image_count(n, Weight(lam))
            assert k == brute_center_count(n, lam)
            assert (n + 1) % k == 0


def test_center_image_count_rejects_wrong_length():
    with pytest.raises(ValueError):
        center_image_count(2, Weight((1, 0)))
