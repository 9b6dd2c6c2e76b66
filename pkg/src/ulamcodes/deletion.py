"""Permutation codes correcting t deletions, built on a Hamming base code.

A permutation belongs to the code when its successor word lies in the base
code. Decoding turns the received sequence into a successor word with t
erasures and at most t substitutions, hands it to the Hamming decoder, then
walks the recovered word back to a permutation.
"""

from __future__ import annotations

import bisect
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ulamcodes.basecode import (
    Codebook,
    DecodeFailure,
    FieldParams,
    build_class,
    build_greedy,
    class_sizes,
    decode_hamming,
    key_to_label,
    label_keys,
    syndrome_array,
)
from ulamcodes.bounds import gabrys_log2
from ulamcodes.channel import deletion_ball
from ulamcodes.mapping import NotInImageError, build_erased_word, f_inverse, f_map, f_map_array, is_in_image
from ulamcodes.metrics import ulam_distance
from ulamcodes.perm import Permutation, permutation_array

MAX_IMAGE_SCAN = 9


@dataclass(frozen=True)
class DeletionCode:
    n: int
    t: int
    base: Codebook
    words: tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(sorted(self.words)))

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __contains__(self, perm) -> bool:
        i = bisect.bisect_left(self.words, tuple(perm))
        return i < len(self.words) and self.words[i] == tuple(perm)

    @property
    def provenance(self) -> str:
        label = "greedy" if self.base.label is None else ",".join(map(str, self.base.label))
        return f"{self.base.construction}:{label}"

    @property
    def redundancy(self) -> float:
        """log2(n!/|code|) in bits."""
        return math.log2(math.factorial(self.n)) - math.log2(len(self))


def construct_code(n: int, t: int, base: Codebook) -> DeletionCode:
    """Pull the base code back through the successor map."""
    if base.params.n_plus_1 != n + 1:
        raise ValueError(f"base code has length {base.params.n_plus_1}, expected {n + 1}")
    words = [f_inverse(w).base for w in base.words if is_in_image(w)]
    return DeletionCode(n=n, t=t, base=base, words=tuple(words))


def image_label_sizes(n: int, t: int, cap: int = MAX_IMAGE_SCAN) -> dict[tuple[int, ...], int]:
    """Size of every non-empty class after intersecting with the image of S_n."""
    if n > cap:
        raise ValueError(f"refusing to enumerate S_{n} (cap {cap})")
    params = FieldParams.for_deletions(n, t)
    return class_sizes(params, words=f_map_array(permutation_array(n)))


def best_label(n: int, t: int, cap: int = MAX_IMAGE_SCAN) -> tuple[int, ...]:
    """The label whose class meets the image most often; ties go to the smallest label."""
    params = FieldParams.for_deletions(n, t)
    if params.r == 0:
        return ()
    images = f_map_array(permutation_array(n)) if n <= cap else None
    if images is None:
        raise ValueError(f"refusing to enumerate S_{n} (cap {cap})")
    keys = label_keys(syndrome_array(images, params), params.p)
    counts = np.bincount(keys)
    return key_to_label(int(np.argmax(counts)), params.p, params.r)


def build_code(
    n: int,
    t: int,
    label: Sequence[int] | str = "auto",
    construction: str = "syndrome",
) -> DeletionCode:
    """Build P_t(n) from a syndrome class (or a greedy base code) of length n+1."""
    params = FieldParams.for_deletions(n, t)
    if construction == "syndrome":
        if label == "auto":
            label = best_label(n, t)
        base = build_class(params, label, t=t)
        return construct_code(n, t, base)
    if construction == "greedy":
        if n > MAX_IMAGE_SCAN:
            raise ValueError(f"refusing to enumerate S_{n} (cap {MAX_IMAGE_SCAN})")
        images = f_map_array(permutation_array(n))
        base = build_greedy(params, 3 * t + 1, words=images, t=t)
        return construct_code(n, t, base)
    raise ValueError(f"unknown construction {construction!r}")


def code_from_words(
    n: int, t: int, words: Iterable[Sequence[int]], label=None, construction: str = "syndrome", p: int | None = None
) -> DeletionCode:
    """Rebuild a code from stored codewords; its base is their successor words."""
    words = [Permutation(w) for w in words]
    params = FieldParams.for_deletions(n, t)
    if p is not None and p != params.p:
        params = FieldParams(p, n + 1, params.r)
    base = Codebook(
        params=params,
        label=None if label is None else tuple(label),
        words=tuple(f_map(w) for w in words),
        declared_min_distance=3 * t + 1,
        construction=construction,
        t=t,
    )
    return DeletionCode(n=n, t=t, base=base, words=tuple(words))


def encode(code: DeletionCode, index: int) -> Permutation:
    """The index-th codeword in lexicographic order."""
    if not 0 <= index < len(code):
        raise IndexError(f"index {index} outside 0..{len(code) - 1}")
    return code.words[index]


def decode_index(code: DeletionCode, perm: Sequence[int]) -> int:
    perm = tuple(perm)
    i = bisect.bisect_left(code.words, perm)
    if i == len(code.words) or code.words[i] != perm:
        raise KeyError(f"{perm} is not a codeword")
    return i


def decode(code: DeletionCode, received: Sequence[int]) -> Permutation:
    """Recover the transmitted codeword from what survives up to t deletions.

    Raises ValueError on malformed input, and :class:`DecodeFailure` or
    :class:`AmbiguousDecode` when the received word is beyond the code's reach.
    """
    n, t = code.n, code.t
    received = tuple(int(x) for x in received)
    if not n - t <= len(received) <= n:
        raise ValueError(f"received length {len(received)} outside {n - t}..{n}")
    erased = build_erased_word(received, n)
    word = decode_hamming(erased, code.base, t, t)
    try:
        return f_inverse(word).base
    except NotInImageError:
        raise DecodeFailure(f"decoded base word {tuple(word)} is not the image of a permutation") from None


def min_ulam_distance(words: Sequence[Sequence[int]]) -> int | None:
    best = None
    for a, b in itertools.combinations(words, 2):
        d = ulam_distance(a, b)
        if best is None or d < best:
            best = d
    return best


def verify_deletion_code(words: Iterable[Sequence[int]], t: int) -> bool:
    """True iff every pair of distinct codewords is more than t apart in the Ulam metric."""
    words = list(words)
    for a, b in itertools.combinations(words, 2):
        if ulam_distance(a, b) <= t:
            return False
    return True


def confusable(x: Sequence[int], y: Sequence[int], t: int) -> bool:
    """Whether some sequence is reachable from both x and y by t deletions."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return not deletion_ball(x, t).isdisjoint(deletion_ball(y, t))


def size_report(code: DeletionCode) -> dict:
    """Size, redundancy and the pigeonhole floor n!/p^(3t-1), with exact comparisons."""
    params = code.base.params
    n_fact = math.factorial(code.n)
    floor = Fraction(n_fact, params.p**params.r)
    gab = gabrys_log2(code.n, code.t)
    return {
        "n": code.n,
        "t": code.t,
        "p": params.p,
        "r": params.r,
        "construction": code.base.construction,
        "label": None if code.base.label is None else list(code.base.label),
        "size": len(code),
        "pigeonhole_floor": str(floor),
        "meets_pigeonhole_floor": len(code) >= floor,
        "redundancy_bits": code.redundancy if len(code) else None,
        "bound_redundancy_bits": math.log2(params.p) * params.r,
        "gabrys_size_log2": gab,
        "gabrys_redundancy_bits": None if gab is None else math.log2(n_fact) - gab,
    }
