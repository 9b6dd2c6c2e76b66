import itertools
import random

import numpy as np
import pytest
from hypothesis import given

from conftest import perms, permutations_st
from ulamcodes.channel import all_patterns, delete_at
from ulamcodes.mapping import (
    ERASED,
    ErasedWord,
    NotInImageError,
    build_erased_word,
    f_inverse,
    f_map,
    f_map_array,
    is_in_image,
)
from ulamcodes.metrics import hamming_distance, ulam_distance
from ulamcodes.perm import Permutation, Translocation, apply_translocation, permutation_array, translocations


def f_by_formula(perm):
    """Direct transcription of the defining formula, positions 1-based."""
    n = len(perm)
    ext = (*perm, n + 1)
    inv = [0] * (n + 1)
    for pos, sym in enumerate(ext, start=1):
        inv[sym - 1] = pos
    out = [ext[inv[i - 1] + 1 - 1] for i in range(1, n + 1)]
    out.append(ext[0])
    return tuple(out)


def test_forward_examples():
    assert f_map((1, 3, 4, 2, 5)) == (3, 5, 4, 2, 6, 1)
    assert f_map((4, 2, 3, 5, 1)) == (6, 3, 5, 2, 1, 4)
    for n in range(1, 8):
        assert f_map(Permutation.identity(n)) == (*range(2, n + 2), 1)


def test_successor_view_example():
    # (2,1,3,4) with sentinel 5: 1 -> 3, 3 -> 4, 5 -> 2.
    w = f_map((2, 1, 3, 4))
    assert w[0] == 3 and w[2] == 4 and w[4] == 2


@given(permutations_st(max_n=20))
def test_matches_defining_formula(p):
    assert f_map(p) == f_by_formula(p)


def test_inverse_examples():
    assert f_inverse((3, 5, 4, 2, 6, 1)) == (1, 3, 4, 2, 5, 6)
    for n in range(1, 8):
        assert f_inverse((*range(2, n + 2), 1)) == tuple(range(1, n + 2))
    with pytest.raises(NotInImageError):
        f_inverse(Permutation.identity(4))


def test_inverse_recursion_literal():
    w = (3, 5, 4, 2, 6, 1)
    out = [w[-1]]
    for _ in range(len(w) - 1):
        out.append(w[out[-1] - 1])
    assert tuple(out) == f_inverse(w)


@pytest.mark.parametrize("n", range(1, 7))
def test_injective_and_round_trip(n):
    images = set()
    for p in perms(n):
        w = f_map(p)
        assert is_in_image(w)
        assert f_inverse(w) == p.extended()
        images.add(w)
    assert len(images) == len(perms(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_membership_matches_enumerated_image(n):
    image = {f_map(p) for p in perms(n)}
    accepted = {w for w in perms(n + 1) if is_in_image(w)}
    assert accepted == image


def test_membership_examples():
    assert is_in_image((3, 5, 4, 2, 6, 1))
    assert not is_in_image(Permutation.identity(6))


@pytest.mark.parametrize("n", range(1, 8))
def test_array_version(n):
    arr = permutation_array(n)
    assert f_map_array(arr).tolist() == [list(f_map(p)) for p in arr.tolist()]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_single_translocation_changes_three_successors(n):
    for p in perms(n):
        for phi in translocations(n):
            if phi.i < phi.j:
                q = apply_translocation(p, phi)
                assert hamming_distance(f_map(p), f_map(q)) == 3


def test_hamming_of_images_at_most_three_ulam_random_n100():
    rng = random.Random(4)
    for _ in range(500):
        x = rng.sample(range(1, 101), 100)
        y = list(x)
        for _ in range(rng.randint(1, 6)):
            i, j = rng.sample(range(1, 101), 2)
            y = apply_translocation(y, Translocation(i, j))
        assert hamming_distance(f_map(x), f_map(y)) <= 3 * ulam_distance(x, y)


def test_erased_word_example():
    w = build_erased_word((1, 4, 2, 5, 6, 9, 7), 9)
    assert str(w) == "4 5 * 2 6 9 10 * 7 1"
    assert w.erased_count == 2
    assert ErasedWord.parse(str(w)) == w


def test_erased_word_without_deletions_is_the_image():
    p = (1, 3, 4, 2, 5)
    w = build_erased_word(p, 5)
    assert w.erased_count == 0
    assert w.entries == f_map(p)


def test_erased_word_single_deletion():
    w = build_erased_word((1, 4, 2, 5), 5)
    assert w.erased_count == 1
    assert w.entries[2] == ERASED
    ref = f_map((1, 3, 4, 2, 5))
    subs = sum(a != b for a, b in zip(w.entries, ref) if a != ERASED)
    assert subs <= 1


def test_erased_word_rejects_bad_input():
    with pytest.raises(ValueError):
        build_erased_word((1, 1, 2), 4)
    with pytest.raises(ValueError):
        build_erased_word((1, 5), 4)


@pytest.mark.parametrize("t", [1, 2])
def test_erasure_and_substitution_budget(t):
    n = 6
    for p in perms(n):
        ref = f_map(p)
        for pat in all_patterns(n, t):
            w = build_erased_word(delete_at(p, pat), n)
            assert w.erased_count == t
            erased_at = {i + 1 for i, x in enumerate(w.entries) if x == ERASED}
            assert erased_at == {p[k - 1] for k in pat.positions}
            subs = sum(a != b for a, b in zip(w.entries, ref) if a != ERASED)
            assert subs <= t
