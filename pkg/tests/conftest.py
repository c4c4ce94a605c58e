import sys
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from linapps.matrix import Matrix

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 12))
small_ints = st.integers(-20, 20)


def matrices(n, m=None, elements=rationals):
    m = n if m is None else m
    return st.lists(
        st.lists(elements, min_size=m, max_size=m), min_size=n, max_size=n
    ).map(Matrix)


def leibniz_det(rows):
    """Determinant by the permutation sum; independent of cofactor expansion."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += term
    return total


def triple_loop(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            for t in range(k):
                out[i][j] += Fraction(a[i][t]) * Fraction(b[t][j])
    return out


@pytest.fixture
def training():
    return Matrix([[30, 20, 100], [25, 30, 60], [20, 45, 55]])


@pytest.fixture
def calories():
    return Matrix([["10.1", "9.2", "12.2"], ["7.2", "6.5", "8.7"], ["5.3", "4.6", "6.4"]])


@pytest.fixture
def strawberry():
    return Matrix([[2, "1/3", 0], [1, "4/3", 0], [1, "1/3", "2/3"]])


@pytest.fixture
def box():
    return Matrix([[1, 5, 0], [6, 2, 0], [3, 2, 4]])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
