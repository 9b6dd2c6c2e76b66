"""Hamming-metric permutation codes of length n+1 over a prime field.

Words are split into classes by their moment syndromes

    s_k(w) = sum_i i**k * w_i  (mod p),   k = 1..r.

The k = 0 moment is the same for every permutation, so two words of one class
differ by a vector in the kernel of an (r+1)-row Vandermonde matrix on the
distinct nodes 1..n+1 (mod p). That kernel is MDS with minimum weight r+2,
hence every class has minimum Hamming distance at least r+2. With r = 3t-1
this gives the distance 3t+1 needed to absorb t substitutions and t erasures,
from p**(3t-1) classes that together cover S_{n+1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from ulamcodes.mapping import ERASED, ErasedWord
from ulamcodes.perm import Permutation, permutation_array

MAX_ENUMERATION_LENGTH = 10
_CHUNK = 1 << 18


class DecodeError(Exception):
    """The received word lies outside the decoder's guaranteed error budget."""


class DecodeFailure(DecodeError):
    """No codeword is close enough to the received word."""


class AmbiguousDecode(DecodeError):
    """More than one codeword is close enough to the received word."""


class EnumerationCapExceeded(RuntimeError):
    pass


def smallest_prime_geq(m: int) -> int:
    if m < 2:
        raise ValueError("m must be at least 2")
    while True:
        if all(m % d for d in range(2, math.isqrt(m) + 1)):
            return m
        m += 1


@dataclass(frozen=True)
class FieldParams:
    p: int
    n_plus_1: int
    r: int

    def __post_init__(self):
        if self.p < self.n_plus_1:
            raise ValueError(f"p={self.p} gives fewer than {self.n_plus_1} distinct evaluation points")
        if smallest_prime_geq(self.p) != self.p:
            raise ValueError(f"p={self.p} is not prime")
        if self.r < 0:
            raise ValueError("r must be non-negative")

    @classmethod
    def for_deletions(cls, n: int, t: int) -> "FieldParams":
        """Parameters for correcting t deletions in length-n permutations."""
        return cls(smallest_prime_geq(n + 1), n + 1, max(3 * t - 1, 0))

    @property
    def label_count(self) -> int:
        return self.p**self.r

    @cached_property
    def moments(self) -> np.ndarray:
        """(n+1, r) matrix of i**k mod p for nodes i = 1..n+1 and k = 1..r."""
        nodes = np.arange(1, self.n_plus_1 + 1, dtype=np.int64) % self.p
        mat = np.empty((self.n_plus_1, self.r), dtype=np.int64)
        col = np.ones(self.n_plus_1, dtype=np.int64)
        for k in range(self.r):
            col = col * nodes % self.p
            mat[:, k] = col
        return mat


@dataclass(frozen=True)
class Codebook:
    params: FieldParams
    label: tuple[int, ...] | None
    words: tuple[Permutation, ...]
    declared_min_distance: int
    construction: str = "syndrome"
    t: int = 0

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(sorted(self.words)))
        for w in self.words:
            if len(w) != self.params.n_plus_1:
                raise ValueError(f"codeword {tuple(w)} does not have length {self.params.n_plus_1}")

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word) -> bool:
        return tuple(word) in self._index

    def __iter__(self):
        return iter(self.words)

    @cached_property
    def _index(self) -> frozenset:
        return frozenset(self.words)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.words, dtype=np.int16).reshape(len(self.words), self.params.n_plus_1)


def syndrome_array(words: np.ndarray, params: FieldParams) -> np.ndarray:
    """Row-wise syndromes of an (m, n+1) array, shape (m, r)."""
    out = np.empty((words.shape[0], params.r), dtype=np.int64)
    for lo in range(0, words.shape[0], _CHUNK):
        block = words[lo : lo + _CHUNK].astype(np.int64)
        out[lo : lo + _CHUNK] = block @ params.moments % params.p
    return out


def label_keys(syndromes: np.ndarray, p: int) -> np.ndarray:
    """Pack syndrome rows into integers, first component most significant."""
    keys = np.zeros(syndromes.shape[0], dtype=np.int64)
    for k in range(syndromes.shape[1]):
        keys = keys * p + syndromes[:, k]
    return keys


def key_to_label(key: int, p: int, r: int) -> tuple[int, ...]:
    digits = []
    for _ in range(r):
        key, d = divmod(key, p)
        digits.append(d)
    return tuple(reversed(digits))


def syndrome(word: Sequence[int], params: FieldParams) -> tuple[int, ...]:
    if len(word) != params.n_plus_1:
        raise ValueError(f"word length {len(word)} does not match n+1={params.n_plus_1}")
    return tuple(
        sum(pow(i, k, params.p) * w for i, w in enumerate(word, start=1)) % params.p
        for k in range(1, params.r + 1)
    )


def _enumerate(length: int, cap: int) -> np.ndarray:
    if length > cap:
        raise EnumerationCapExceeded(f"refusing to enumerate S_{length} (cap {cap})")
    return permutation_array(length)


def build_class(
    params: FieldParams,
    label: Sequence[int],
    words: Iterable[Sequence[int]] | np.ndarray | None = None,
    cap: int = MAX_ENUMERATION_LENGTH,
    t: int = 0,
) -> Codebook:
    """All words with the given syndrome, from S_{n+1} or from ``words`` if supplied."""
    label = tuple(int(c) % params.p for c in label)
    if len(label) != params.r:
        raise ValueError(f"label has {len(label)} components, expected r={params.r}")
    if words is None:
        pool = _enumerate(params.n_plus_1, cap)
    else:
        pool = np.asarray(list(words) if not isinstance(words, np.ndarray) else words)
        pool = pool.reshape(-1, params.n_plus_1)
    if params.r:
        hit = np.all(syndrome_array(pool, params) == np.array(label), axis=1)
        pool = pool[hit]
    return Codebook(
        params=params,
        label=label,
        words=tuple(Permutation(row.tolist()) for row in pool),
        declared_min_distance=params.r + 2,
        construction="syndrome",
        t=t,
    )


def class_sizes(params: FieldParams, words: np.ndarray | None = None, cap: int = MAX_ENUMERATION_LENGTH) -> dict:
    """Map label -> class size over S_{n+1} (or over ``words``); empty classes omitted."""
    pool = _enumerate(params.n_plus_1, cap) if words is None else words
    keys = label_keys(syndrome_array(pool, params), params.p)
    uniq, counts = np.unique(keys, return_counts=True)
    return {key_to_label(int(k), params.p, params.r): int(c) for k, c in zip(uniq, counts)}


def build_greedy(
    params: FieldParams,
    d: int,
    order: str = "lex",
    words: Iterable[Sequence[int]] | np.ndarray | None = None,
    cap: int = MAX_ENUMERATION_LENGTH,
    seed: int = 0,
    t: int = 0,
) -> Codebook:
    """Admit candidates one at a time if they stay at Hamming distance >= d from all kept.

    ``order`` is ``"lex"`` (lexicographic) or ``"random"`` (a seeded shuffle).
    Candidates default to all of S_{n+1}.
    """
    if words is None:
        pool = _enumerate(params.n_plus_1, cap)
    else:
        pool = np.asarray(list(words) if not isinstance(words, np.ndarray) else words)
        pool = pool.reshape(-1, params.n_plus_1)
        pool = pool[np.lexsort(pool.T[::-1])]
    if order == "random":
        pool = pool[np.random.default_rng(seed).permutation(len(pool))]
    elif order != "lex":
        raise ValueError(f"unknown order {order!r}")

    kept = np.empty((len(pool), params.n_plus_1), dtype=pool.dtype)
    size = 0
    for row in pool:
        if size == 0 or (kept[:size] != row).sum(axis=1).min() >= d:
            kept[size] = row
            size += 1
    return Codebook(
        params=params,
        label=None,
        words=tuple(Permutation(row.tolist()) for row in kept[:size]),
        declared_min_distance=d,
        construction="greedy",
        t=t,
    )


def min_distance(words: np.ndarray) -> int | None:
    """Smallest pairwise Hamming distance among rows, None for fewer than two rows."""
    best = None
    for i in range(len(words) - 1):
        d = int((words[i + 1 :] != words[i]).sum(axis=1).min())
        if best is None or d < best:
            best = d
    return best


def verify_min_distance(book: Codebook | np.ndarray, d: int) -> bool:
    arr = book.array if isinstance(book, Codebook) else np.asarray(book)
    for i in range(len(arr) - 1):
        if (arr[i + 1 :] != arr[i]).sum(axis=1).min() < d:
            return False
    return True


def decode_hamming(word: ErasedWord | Sequence[int], book: Codebook, t1: int, t2: int) -> Permutation:
    """Nearest codeword agreeing with ``word`` on all but at most t1 unerased slots.

    Raises :class:`DecodeFailure` if nothing qualifies and
    :class:`AmbiguousDecode` if several codewords do.
    """
    if not isinstance(word, ErasedWord):
        word = ErasedWord(tuple(word))
    if len(word) != book.params.n_plus_1:
        raise ValueError(f"word length {len(word)} does not match n+1={book.params.n_plus_1}")
    if word.erased_count > t2:
        raise ValueError(f"{word.erased_count} erasures exceed the budget t2={t2}")
    if len(book) == 0:
        raise DecodeFailure("empty codebook")
    w = np.array(word.entries, dtype=np.int16)
    mismatches = ((book.array != w) & (w != ERASED)).sum(axis=1)
    hits = np.flatnonzero(mismatches <= t1)
    if len(hits) == 0:
        raise DecodeFailure(f"no codeword within {t1} substitutions of {word}")
    if len(hits) > 1:
        raise AmbiguousDecode(f"{len(hits)} codewords within {t1} substitutions of {word}")
    return book.words[int(hits[0])]
