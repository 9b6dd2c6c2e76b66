import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import lcs_bruteforce, perm_pairs, perms
from ulamcodes.metrics import (
    GeneratorSet,
    SearchCapExceeded,
    bfs_distances,
    bfs_group_distance,
    distance,
    hamming_distance,
    indel_distance,
    kendall_tau_distance,
    lcs_length,
    levenshtein_distance,
    ulam_distance,
)
from ulamcodes.perm import Permutation

PI = (4, 3, 1, 2, 5)
SIGMA = (4, 3, 5, 1, 2)


def test_hamming_examples():
    assert hamming_distance(PI, SIGMA) == 3
    assert hamming_distance(PI, PI) == 0
    assert hamming_distance((3, 5, 4, 2, 6, 1), (6, 3, 5, 2, 1, 4)) == 5
    with pytest.raises(ValueError):
        hamming_distance((1, 2), (1, 2, 3))


def test_lcs_examples():
    assert lcs_length(PI, SIGMA) == 4
    assert lcs_length(PI, PI) == 5
    assert lcs_length((1, 2, 3, 4), (4, 3, 2, 1)) == 1
    assert lcs_length("ABCBDAB", "BDCABA") == 4
    assert lcs_length((), (1, 2)) == 0


@settings(max_examples=200)
@given(st.lists(st.integers(0, 3), max_size=8), st.lists(st.integers(0, 3), max_size=8))
def test_lcs_matches_bruteforce_on_general_sequences(x, y):
    assert lcs_length(x, y) == lcs_bruteforce(x, y)


def test_ulam_examples():
    assert ulam_distance(PI, SIGMA) == 1
    assert ulam_distance((1, 3, 4, 2, 5), (4, 2, 3, 5, 1)) == 2
    assert ulam_distance(PI, PI) == 0


@given(perm_pairs(max_n=30))
def test_ulam_fast_path_agrees_with_dp(pair):
    x, y = pair
    assert ulam_distance(x, y) == len(x) - lcs_length(x, y)


def test_levenshtein_examples():
    assert levenshtein_distance(PI, SIGMA) == 2
    assert levenshtein_distance(PI, PI) == 0


def test_levenshtein_against_indel_dp_random():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 8)
        x, y = rng.sample(range(1, n + 1), n), rng.sample(range(1, n + 1), n)
        assert levenshtein_distance(x, y) == indel_distance(x, y)


@pytest.mark.parametrize("n", range(1, 7))
def test_levenshtein_is_twice_ulam_exhaustive(n):
    ps = perms(n)
    for x in ps:
        for y in ps:
            assert indel_distance(x, y) == 2 * (n - lcs_length(x, y))


def test_levenshtein_is_twice_ulam_at_n50():
    rng = random.Random(1000)
    for _ in range(1000):
        x, y = rng.sample(range(1, 51), 50), rng.sample(range(1, 51), 50)
        assert indel_distance(x, y) == 2 * (50 - lcs_length(x, y))


def test_kendall_examples():
    assert kendall_tau_distance((1, 2, 3), (1, 2, 3)) == 0
    assert kendall_tau_distance((1, 2, 3), (2, 1, 3)) == 1
    # frozen from a BFS over adjacent transpositions
    assert kendall_tau_distance((1, 2, 3, 4), (4, 3, 2, 1)) == 6


@given(perm_pairs(max_n=40))
def test_kendall_equals_discordant_pairs(pair):
    x, y = pair
    px = {s: i for i, s in enumerate(x)}
    py = {s: i for i, s in enumerate(y)}
    discordant = sum((px[a] - px[b]) * (py[a] - py[b]) < 0 for a, b in itertools.combinations(x, 2))
    assert kendall_tau_distance(x, y) == discordant


@pytest.mark.parametrize("n", [4, 5])
def test_kendall_matches_bfs(n):
    for x in perms(n):
        dist = bfs_distances(x, GeneratorSet.ADJACENT_TRANSPOSITION)
        for y, d in dist.items():
            assert kendall_tau_distance(x, y) == d


def test_bfs_examples():
    assert bfs_group_distance(PI, SIGMA, "translocation") == 1
    for gen in GeneratorSet:
        assert bfs_group_distance(PI, PI, gen) == 0
    assert bfs_group_distance((1, 2, 3, 4), (4, 3, 2, 1), "adjacent-transposition") == 6


@pytest.mark.parametrize("n", range(1, 6))
def test_bfs_translocation_is_n_minus_lcs(n):
    for x in perms(n):
        dist = bfs_distances(x, "translocation")
        assert len(dist) == len(perms(n))
        for y, d in dist.items():
            assert d == n - lcs_length(x, y)


def test_bfs_cap():
    with pytest.raises(SearchCapExceeded):
        bfs_group_distance((1, 2, 3, 4, 5, 6), (6, 5, 4, 3, 2, 1), "adjacent-transposition", cap=50)


@pytest.mark.parametrize("n", [4, 5])
@pytest.mark.parametrize("metric", [hamming_distance, ulam_distance, kendall_tau_distance])
def test_metric_axioms(n, metric):
    ps = perms(n)
    d = {(x, y): metric(x, y) for x in ps for y in ps}
    for x in ps:
        assert d[x, x] == 0
        for y in ps:
            assert d[x, y] == d[y, x]
            if x != y:
                assert d[x, y] > 0
    # triangle inequality; the full triple loop is 1.7M checks at n=5, so sample z.
    zs = ps if n == 4 else ps[::7]
    for x in ps:
        for y in ps:
            for z in zs:
                assert d[x, y] <= d[x, z] + d[z, y]


def test_sandwich_and_hamming_bracket(s5):
    n = 5
    for x in s5:
        dk_bar = bfs_distances(x, "generalized-adjacent-transposition")
        for y in s5:
            du = ulam_distance(x, y)
            dh = hamming_distance(x, y)
            assert dk_bar[y] <= du <= kendall_tau_distance(x, y)
            assert dh <= n * du and du <= dh


def test_distance_dispatch():
    assert distance("ulam", PI, SIGMA) == 1
    assert distance("bfs:translocation", PI, SIGMA) == 1
    with pytest.raises(ValueError):
        distance("cayley", PI, SIGMA)
