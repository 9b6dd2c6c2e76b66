"""Pairwise distances between permutations, plus brute-force oracles.

The fast routines (Hamming, LCS, Ulam, Kendall-tau) are exact for any length.
Generator distances with no known efficient algorithm (block moves, block
swaps) are available only through :func:`bfs_group_distance`, which searches
the Cayley graph outright and refuses to run past a state cap.
"""

from __future__ import annotations

import bisect
from collections import deque
from enum import Enum
from typing import Callable, Iterator, Sequence

from ulamcodes.perm import (
    Permutation,
    apply_generalized_transposition,
    apply_translocation,
    apply_transposition,
    generalized_transpositions,
    translocations,
    transpositions,
)

DEFAULT_BFS_CAP = 10**7


class SearchCapExceeded(RuntimeError):
    """The BFS oracle gave up; the instance is too large, not unreachable."""


class GeneratorSet(str, Enum):
    ADJACENT_TRANSPOSITION = "adjacent-transposition"
    TRANSLOCATION = "translocation"
    GENERALIZED_ADJACENT_TRANSPOSITION = "generalized-adjacent-transposition"
    GENERALIZED_TRANSPOSITION = "generalized-transposition"

    def moves(self, n: int) -> list[Callable[[Permutation], Permutation]]:
        if self is GeneratorSet.ADJACENT_TRANSPOSITION:
            return [_bind(apply_transposition, g) for g in transpositions(n, adjacent_only=True)]
        if self is GeneratorSet.TRANSLOCATION:
            return [_bind(apply_translocation, g) for g in translocations(n)]
        if self is GeneratorSet.GENERALIZED_ADJACENT_TRANSPOSITION:
            return [_bind(apply_generalized_transposition, g) for g in generalized_transpositions(n, adjacent_only=True)]
        return [_bind(apply_generalized_transposition, g) for g in generalized_transpositions(n)]


def _bind(action, g):
    return lambda p: action(p, g)


def _same_length(x: Sequence, y: Sequence) -> int:
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return len(x)


def hamming_distance(x: Sequence[int], y: Sequence[int]) -> int:
    _same_length(x, y)
    return sum(a != b for a, b in zip(x, y))


def lcs_length(x: Sequence, y: Sequence) -> int:
    """Length of a longest common subsequence, by the quadratic DP in two rows."""
    if len(y) > len(x):
        x, y = y, x
    prev = [0] * (len(y) + 1)
    for a in x:
        cur = [0] * (len(y) + 1)
        for j, b in enumerate(y, start=1):
            if a == b:
                cur[j] = prev[j - 1] + 1
            else:
                cur[j] = cur[j - 1] if cur[j - 1] > prev[j] else prev[j]
        prev = cur
    return prev[-1]


def _lcs_of_permutations(x: Sequence[int], y: Sequence[int]) -> int:
    # LCS of two arrangements of the same symbol set is the longest increasing
    # run of y's positions read in x order; patience sorting does it in n log n.
    pos = {sym: i for i, sym in enumerate(y)}
    tails: list[int] = []
    for sym in x:
        k = bisect.bisect_left(tails, pos[sym])
        if k == len(tails):
            tails.append(pos[sym])
        else:
            tails[k] = pos[sym]
    return len(tails)


def ulam_distance(x: Sequence[int], y: Sequence[int]) -> int:
    """n minus the LCS length; equals the minimum number of translocations."""
    n = _same_length(x, y)
    if set(x) != set(y) or len(set(x)) != n:
        return n - lcs_length(x, y)
    return n - _lcs_of_permutations(x, y)


def indel_distance(x: Sequence, y: Sequence) -> int:
    """Minimum insertions plus deletions turning x into y (no substitutions).

    Computed by its own DP rather than through the LCS so that it can serve as
    an independent check of ``levenshtein_distance``.
    """
    prev = list(range(len(y) + 1))
    for i, a in enumerate(x, start=1):
        cur = [i] + [0] * len(y)
        for j, b in enumerate(y, start=1):
            if a == b:
                cur[j] = prev[j - 1]
            else:
                cur[j] = 1 + min(prev[j], cur[j - 1])
        prev = cur
    return prev[-1]


def levenshtein_distance(x: Sequence[int], y: Sequence[int]) -> int:
    """Insertion/deletion distance between equal-length permutations: twice Ulam."""
    return 2 * ulam_distance(x, y)


def _count_inversions(seq: list[int]) -> int:
    if len(seq) < 2:
        return 0
    mid = len(seq) // 2
    left, right = seq[:mid], seq[mid:]
    inv = _count_inversions(left) + _count_inversions(right)
    i = j = k = 0
    while i < len(left) and j < len(right):
        if left[i] <= right[j]:
            seq[k] = left[i]
            i += 1
        else:
            seq[k] = right[j]
            inv += len(left) - i
            j += 1
        k += 1
    seq[k:] = left[i:] + right[j:]
    return inv


def kendall_tau_distance(x: Sequence[int], y: Sequence[int]) -> int:
    """Number of symbol pairs ordered differently in x and y."""
    _same_length(x, y)
    pos = {sym: i for i, sym in enumerate(y)}
    return _count_inversions([pos[sym] for sym in x])


def bfs_distances(
    source: Permutation,
    gen: GeneratorSet | str,
    cap: int = DEFAULT_BFS_CAP,
    target: Permutation | None = None,
) -> dict[Permutation, int]:
    """Breadth-first search over the Cayley graph generated by ``gen``.

    Returns the distance to every state discovered; stops early once
    ``target`` is found. Raises :class:`SearchCapExceeded` when more than
    ``cap`` states would be stored.
    """
    gen = GeneratorSet(gen)
    source = Permutation(source)
    moves = gen.moves(len(source))
    dist = {source: 0}
    if target is not None and source == target:
        return dist
    queue = deque([source])
    while queue:
        cur = queue.popleft()
        d = dist[cur] + 1
        for move in moves:
            nxt = move(cur)
            if nxt in dist:
                continue
            dist[nxt] = d
            if target is not None and nxt == target:
                return dist
            if len(dist) > cap:
                raise SearchCapExceeded(f"BFS exceeded {cap} states at n={len(source)}")
            queue.append(nxt)
    return dist


def bfs_group_distance(
    x: Sequence[int], y: Sequence[int], gen: GeneratorSet | str, cap: int = DEFAULT_BFS_CAP
) -> int:
    """Exact minimum number of ``gen`` actions turning x into y."""
    _same_length(x, y)
    target = Permutation(y)
    return bfs_distances(Permutation(x), gen, cap, target=target)[target]


METRICS: dict[str, Callable[[Sequence[int], Sequence[int]], int]] = {
    "hamming": hamming_distance,
    "ulam": ulam_distance,
    "levenshtein": levenshtein_distance,
    "kendall": kendall_tau_distance,
}


def metric_names() -> Iterator[str]:
    yield from METRICS
    for g in GeneratorSet:
        yield f"bfs:{g.value}"


def distance(metric: str, x: Sequence[int], y: Sequence[int]) -> int:
    if metric.startswith("bfs:"):
        return bfs_group_distance(x, y, metric[4:])
    try:
        fn = METRICS[metric]
    except KeyError:
        raise ValueError(f"unknown metric {metric!r}") from None
    return fn(x, y)
