"""The successor mapping from S_n into S_{n+1} and its erasure-aware variant.

Append the sentinel n+1 to a permutation and read it as a cycle. The image
word holds, at position i, the symbol that follows i in that cycle; the
sentinel's successor wraps around to the first entry. A single translocation
of the permutation changes exactly three successors, which is what lets a
Hamming-metric code protect against deletions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ulamcodes.perm import ExtendedPermutation, Permutation

ERASED = 0


class NotInImageError(ValueError):
    """The word is not the image of any permutation with the sentinel last."""


@dataclass(frozen=True)
class ErasedWord:
    """A length n+1 word over 1..n+1 with ERASED (0) marking unknown slots."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        seen = [x for x in entries if x != ERASED]
        if len(set(seen)) != len(seen):
            raise ValueError(f"repeated symbols in {entries}")
        if any(not 1 <= x <= len(entries) for x in seen):
            raise ValueError(f"symbols of {entries} must lie in 1..{len(entries)}")

    @property
    def erased_count(self) -> int:
        return self.entries.count(ERASED)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return " ".join("*" if x == ERASED else str(x) for x in self.entries)

    @classmethod
    def parse(cls, line: str) -> "ErasedWord":
        return cls(tuple(ERASED if tok == "*" else int(tok) for tok in line.split()))


def _successor_word(seq: Sequence[int], length: int) -> list[int]:
    # Cyclic successor of every symbol in seq + (length,); symbols absent
    # from seq keep ERASED.
    closed = (*seq, length)
    word = [ERASED] * length
    for k, sym in enumerate(closed):
        word[sym - 1] = closed[(k + 1) % len(closed)]
    return word


def f_map(perm: Sequence[int]) -> Permutation:
    """Map a permutation of [n] to the successor word of (perm, n+1)."""
    if isinstance(perm, ExtendedPermutation):
        perm = perm.base
    perm = Permutation(perm)
    return Permutation._trusted(_successor_word(perm, len(perm) + 1))


def f_map_array(perms: np.ndarray) -> np.ndarray:
    """Row-wise :func:`f_map` over an (m, n) array of permutations."""
    m, n = perms.shape
    closed = np.hstack([perms, np.full((m, 1), n + 1, dtype=perms.dtype)])
    succ = np.roll(closed, -1, axis=1)
    out = np.empty_like(closed)
    np.put_along_axis(out, closed.astype(np.intp) - 1, succ, axis=1)
    return out


def image_walk(word: Sequence[int]) -> list[int]:
    """Follow i -> word[i] from word[n+1] until a symbol repeats."""
    seen = set()
    walk = []
    cur = word[-1]
    while cur not in seen:
        seen.add(cur)
        walk.append(cur)
        cur = word[cur - 1]
    return walk


def is_in_image(word: Sequence[int]) -> bool:
    """True iff ``word`` is a single (n+1)-cycle, i.e. the image of some permutation."""
    word = Permutation(word)
    return len(image_walk(word)) == len(word)


def f_inverse(word: Sequence[int]) -> ExtendedPermutation:
    """Recover (perm, n+1) from its image: start at word[n+1], then follow successors."""
    word = Permutation(word)
    walk = image_walk(word)
    if len(walk) != len(word):
        raise NotInImageError(f"{tuple(word)} is not in the image of the successor map")
    return ExtendedPermutation._trusted(walk)


def build_erased_word(received: Sequence[int], n: int) -> ErasedWord:
    """Successor word of (received, n+1) with ERASED at every missing symbol.

    ``received`` is what is left of a permutation of [n] after deletions; the
    deleted symbols are exactly those of 1..n not present in it.
    """
    received = tuple(int(x) for x in received)
    if len(set(received)) != len(received):
        raise ValueError(f"received sequence {received} repeats a symbol")
    if any(not 1 <= x <= n for x in received):
        raise ValueError(f"received sequence {received} has symbols outside 1..{n}")
    return ErasedWord(tuple(_successor_word(received, n + 1)))
