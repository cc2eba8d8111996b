from itertools import combinations, product

import pytest

from evasive import EvasiveSet, PrimeField, explicit_params, gen_params
from evasive.linalg import AffineSubspace


def small_instance():
    """p=7, k=1, m=2, n=4, A=[[1,1]], degrees (5, 2)."""
    return explicit_params(7, 1, 2, 4, (5, 2), matrix=[[1, 1]])


def p17_instance():
    return gen_params(2, 4, 8)


def p7_k2_instance(m=3, n=None):
    degrees = {3: (7, 5, 1), 4: (11, 7, 5, 1)}[m]
    return explicit_params(7, 2, m, n or m, degrees, gammas=range(1, m + 1))


@pytest.fixture
def small():
    return small_instance()


@pytest.fixture
def small_set(small):
    return EvasiveSet(small)


@pytest.fixture(scope="session")
def p17():
    return p17_instance()


@pytest.fixture(scope="session")
def p17_set(p17):
    return EvasiveSet(p17)


def all_affine_subspaces(p, n, r):
    """Every r-dimensional affine subspace of F_p^n exactly once (echelon basis, reduced offset)."""
    f = PrimeField(p)
    for pivots in combinations(range(n), r):
        slots = [(i, j) for i, piv in enumerate(pivots) for j in range(piv + 1, n) if j not in pivots]
        free_off = [j for j in range(n) if j not in pivots]
        for vals in product(range(p), repeat=len(slots)):
            basis = [[0] * n for _ in range(r)]
            for i, piv in enumerate(pivots):
                basis[i][piv] = 1
            for (i, j), v in zip(slots, vals):
                basis[i][j] = v
            for ov in product(range(p), repeat=len(free_off)):
                off = [0] * n
                for j, v in zip(free_off, ov):
                    off[j] = v
                yield AffineSubspace(f, off, basis)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
