import random

import pytest
from hypothesis import settings

from lattice_voa import validate_lattice

settings.register_profile("repo", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("repo")

A1 = [[2]]
A2 = [[2, 1], [1, 2]]
DIAG_2_4 = [[2, 0], [0, 4]]
FOUR = [[4]]
D4 = [[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]
# Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to node 4
E8 = [
    [2, 0, -1, 0, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, 0],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, 0, -1, 2],
]

SMALL = {"A1": A1, "A2": A2, "diag24": DIAG_2_4, "four": FOUR, "D4": D4}


def random_even_gram(rng: random.Random, d: int):
    """Diagonally dominant symmetric matrix with even diagonal: always valid."""
    G = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(i):
            G[i][j] = G[j][i] = rng.randint(-3, 3)
    for i in range(d):
        off = sum(abs(G[i][j]) for j in range(d) if j != i)
        G[i][i] = 2 * (off // 2 + 1 + rng.randint(0, 2))
    return G


@pytest.fixture(params=list(SMALL), ids=list(SMALL))
def small_lattice(request):
    return validate_lattice(SMALL[request.param])


@pytest.fixture
def a1():
    return validate_lattice(A1)


@pytest.fixture
def a2():
    return validate_lattice(A2)


@pytest.fixture
def e8():
    return validate_lattice(E8)


# one line per acceptance criterion in the terminal summary
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
