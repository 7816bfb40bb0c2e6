import random
from math import gcd
from functools import reduce

import pytest

from toricloops.errors import RedundantHalfSpace
from toricloops.polytope import HalfSpace, build_polytope

ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)


def box(dim, lo=0, hi=1):
    hs = []
    for k in range(dim):
        e = [0] * dim
        e[k] = 1
        hs.append(HalfSpace(tuple(e), hi))
        e = [0] * dim
        e[k] = -1
        hs.append(HalfSpace(tuple(e), -lo))
    return build_polytope(dim, hs)


def build_dropping_redundant(dim, halfspaces):
    halfspaces = list(halfspaces)
    while True:
        try:
            return build_polytope(dim, halfspaces)
        except RedundantHalfSpace as exc:
            del halfspaces[exc.index]


def random_lattice_polytope(rng, dim, bound=4, cuts=3):
    """Box [-bound, bound]^dim with random integral cuts keeping the origin interior."""
    hs = list(box(dim, -bound, bound).halfspaces)
    for _ in range(cuts):
        while True:
            nu = tuple(rng.randint(-3, 3) for _ in range(dim))
            if any(nu) and reduce(gcd, map(abs, nu)) == 1:
                break
        top = bound * sum(abs(c) for c in nu)
        hs.append(HalfSpace(nu, rng.randint(1, top)))
    return build_dropping_redundant(dim, hs)


def random_unimodular(rng, dim, steps=6):
    m = [[int(i == j) for j in range(dim)] for i in range(dim)]
    for _ in range(steps):
        i, j = rng.sample(range(dim), 2)
        c = rng.choice([-2, -1, 1, 2])
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        if rng.random() < 0.3:
            m[i], m[j] = m[j], m[i]
    return m


@pytest.fixture
def rng():
    return random.Random(20240611)
