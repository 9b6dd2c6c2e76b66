import itertools
import math

import pytest
from hypothesis import strategies as st

from ulamcodes.perm import Permutation


def perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


@st.composite
def permutations_st(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    return Permutation(draw(st.permutations(range(1, n + 1))))


@st.composite
def perm_pairs(draw, min_n=1, max_n=12):
    n = draw(st.integers(min_n, max_n))
    a = draw(st.permutations(range(1, n + 1)))
    b = draw(st.permutations(range(1, n + 1)))
    return Permutation(a), Permutation(b)


def lcs_bruteforce(x, y):
    """Longest common subsequence by trying every subsequence of x, longest first."""
    for k in range(len(x), -1, -1):
        for idx in itertools.combinations(range(len(x)), k):
            sub = [x[i] for i in idx]
            it = iter(y)
            if all(s in it for s in sub):
                return k
    return 0


@pytest.fixture(scope="session")
def s5():
    return perms(5)


@pytest.fixture(scope="session")
def s4():
    return perms(4)


def factorial(n):
    return math.factorial(n)
