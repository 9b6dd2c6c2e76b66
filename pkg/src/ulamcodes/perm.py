"""Permutations in one-line form and the edit actions that act on them.

Positions and symbols are 1-based at every public interface: a permutation of
length n holds each of 1..n exactly once, and actions name positions in 1..n.
The underlying storage is a plain tuple, so ``p[0]`` is the first entry.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class Permutation(tuple):
    """A bijection on [n] stored in one-line form.

    Construction validates eagerly, so everything downstream may assume the
    entries are exactly 1..n in some order.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        entries = tuple(int(x) for x in entries)
        if sorted(entries) != list(range(1, len(entries) + 1)):
            raise ValueError(f"{entries} is not a permutation of 1..{len(entries)}")
        return super().__new__(cls, entries)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def _trusted(cls, entries: Sequence[int]) -> "Permutation":
        # Skips validation; callers guarantee a bijection.
        return tuple.__new__(cls, entries)

    @property
    def n(self) -> int:
        return len(self)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def extended(self) -> "ExtendedPermutation":
        """Append n+1 as a fixed sentinel."""
        return ExtendedPermutation._trusted((*self, len(self) + 1))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({tuple(self)!r})"

    def __str__(self) -> str:
        return format_perm(self)


class ExtendedPermutation(Permutation):
    """A permutation of [n+1] whose last entry is the sentinel n+1."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        self = super().__new__(cls, entries)
        if len(self) == 0 or self[-1] != len(self):
            raise ValueError(f"last entry of {tuple(self)} must be {len(self)}")
        return self

    @property
    def base(self) -> Permutation:
        """The underlying permutation of [n] with the sentinel stripped."""
        return Permutation._trusted(self[:-1])


@dataclass(frozen=True)
class Transposition:
    """Swap the entries at positions i and j."""

    i: int
    j: int

    def __post_init__(self):
        if self.i == self.j:
            raise ValueError("transposition needs distinct positions")


@dataclass(frozen=True)
class Translocation:
    """Remove the entry at position i and reinsert it at position j.

    ``Translocation(i, i)`` is accepted and acts as the identity.
    """

    i: int
    j: int


@dataclass(frozen=True)
class GeneralizedTransposition:
    """Exchange the blocks at position intervals ``a`` and ``b`` (inclusive)."""

    a: tuple[int, int]
    b: tuple[int, int]

    def __post_init__(self):
        a, b = tuple(self.a), tuple(self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        for lo, hi in (a, b):
            if lo > hi:
                raise ValueError(f"empty interval [{lo},{hi}]")
        first, second = sorted((a, b))
        if first[1] >= second[0]:
            raise ValueError(f"intervals {a} and {b} overlap")

    @property
    def adjacent(self) -> bool:
        first, second = sorted((self.a, self.b))
        return second[0] - first[1] == 1


def _check_position(n: int, *positions: int) -> None:
    for k in positions:
        if not 1 <= k <= n:
            raise IndexError(f"position {k} outside 1..{n}")


def inverse(perm: Sequence[int]) -> Permutation:
    """Return the inverse: entry i of the result is the position of symbol i."""
    inv = [0] * len(perm)
    for pos, sym in enumerate(perm, start=1):
        inv[sym - 1] = pos
    return Permutation._trusted(inv)


def apply_transposition(perm: Permutation, tau: Transposition) -> Permutation:
    n = len(perm)
    _check_position(n, tau.i, tau.j)
    out = list(perm)
    out[tau.i - 1], out[tau.j - 1] = out[tau.j - 1], out[tau.i - 1]
    return Permutation._trusted(out)


def apply_translocation(perm: Permutation, phi: Translocation) -> Permutation:
    n = len(perm)
    _check_position(n, phi.i, phi.j)
    out = list(perm)
    sym = out.pop(phi.i - 1)
    out.insert(phi.j - 1, sym)
    return Permutation._trusted(out)


def apply_generalized_transposition(perm: Permutation, g: GeneralizedTransposition) -> Permutation:
    n = len(perm)
    (i, j), (k, l) = sorted((g.a, g.b))
    _check_position(n, i, j, k, l)
    p = tuple(perm)
    # Python slices are 0-based and half-open: block [i, j] is p[i-1:j].
    out = p[: i - 1] + p[k - 1 : l] + p[j : k - 1] + p[i - 1 : j] + p[l:]
    return Permutation._trusted(out)


def transpositions(n: int, adjacent_only: bool = False) -> Iterator[Transposition]:
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not adjacent_only or j == i + 1:
                yield Transposition(i, j)


def translocations(n: int) -> Iterator[Translocation]:
    """All non-trivial translocations on n positions."""
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                yield Translocation(i, j)


def generalized_transpositions(n: int, adjacent_only: bool = False) -> Iterator[GeneralizedTransposition]:
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            k_range = [j + 1] if adjacent_only else range(j + 1, n + 1)
            for k in k_range:
                for l in range(k, n + 1):
                    yield GeneralizedTransposition((i, j), (k, l))


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every permutation of [n] in lexicographic order."""
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(p)


def permutation_array(n: int, dtype=np.int8) -> np.ndarray:
    """All n! permutations of [n] as rows of an array, lexicographic order."""
    arr = np.ones((1, 1), dtype=dtype) if n >= 1 else np.zeros((1, 0), dtype=dtype)
    for m in range(2, n + 1):
        blocks = []
        for first in range(1, m + 1):
            # Shift symbols >= first up by one to make room for the leading symbol.
            rest = arr + (arr >= first)
            lead = np.full((rest.shape[0], 1), first, dtype=dtype)
            blocks.append(np.hstack([lead, rest.astype(dtype)]))
        arr = np.vstack(blocks)
    return arr


def rank(perm: Sequence[int]) -> int:
    """Lexicographic rank of a permutation (Lehmer code), 0-based."""
    n = len(perm)
    remaining = list(range(1, n + 1))
    r = 0
    for pos, sym in enumerate(perm):
        idx = remaining.index(sym)
        r += idx * math.factorial(n - 1 - pos)
        remaining.pop(idx)
    return r


def unrank(n: int, r: int) -> Permutation:
    if not 0 <= r < math.factorial(n):
        raise IndexError(f"rank {r} outside 0..{math.factorial(n) - 1}")
    remaining = list(range(1, n + 1))
    out = []
    for pos in range(n):
        f = math.factorial(n - 1 - pos)
        idx, r = divmod(r, f)
        out.append(remaining.pop(idx))
    return Permutation._trusted(out)


def format_perm(seq: Iterable[int]) -> str:
    return " ".join(str(x) for x in seq)


def parse_perm(line: str) -> Permutation:
    return Permutation(int(tok) for tok in line.split())


def parse_sequence(line: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in line.split())
