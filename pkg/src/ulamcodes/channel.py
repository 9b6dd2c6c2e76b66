"""Symbol-invariant deletion channel.

Deleting entries from a permutation leaves the surviving values untouched;
the receiver sees a shorter sequence of distinct symbols.

Random patterns come from :class:`random.Random` (Mersenne Twister) seeded
with the given integer: ``sorted(Random(seed).sample(range(1, n + 1), t))``.
That recipe is part of the interface, so a seed names the same pattern on
every platform and Python release that keeps ``random.sample`` stable.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class DeletionPattern:
    """Strictly increasing 1-based positions to delete."""

    positions: tuple[int, ...]

    def __post_init__(self):
        pos = tuple(int(i) for i in self.positions)
        object.__setattr__(self, "positions", pos)
        if any(a >= b for a, b in zip(pos, pos[1:])):
            raise ValueError(f"positions {pos} must be strictly increasing")
        if pos and pos[0] < 1:
            raise ValueError(f"positions {pos} must be >= 1")

    def __len__(self) -> int:
        return len(self.positions)


def delete_at(seq: Sequence[int], pattern: DeletionPattern | Sequence[int]) -> tuple[int, ...]:
    if not isinstance(pattern, DeletionPattern):
        pattern = DeletionPattern(tuple(pattern))
    if pattern.positions and pattern.positions[-1] > len(seq):
        raise IndexError(f"pattern {pattern.positions} exceeds length {len(seq)}")
    gone = set(pattern.positions)
    return tuple(x for i, x in enumerate(seq, start=1) if i not in gone)


def delete_symbols(seq: Sequence[int], symbols) -> tuple[int, ...]:
    """Delete by value rather than by position."""
    symbols = set(symbols)
    missing = symbols - set(seq)
    if missing:
        raise ValueError(f"symbols {sorted(missing)} do not occur in the sequence")
    return tuple(x for x in seq if x not in symbols)


def all_patterns(n: int, t: int) -> Iterator[DeletionPattern]:
    for pos in itertools.combinations(range(1, n + 1), t):
        yield DeletionPattern(pos)


def deletion_ball(seq: Sequence[int], t: int) -> set[tuple[int, ...]]:
    """Every distinct sequence obtainable from ``seq`` by exactly t deletions."""
    if not 0 <= t <= len(seq):
        raise ValueError(f"t={t} outside 0..{len(seq)}")
    return {tuple(seq[i] for i in keep) for keep in itertools.combinations(range(len(seq)), len(seq) - t)}


def sample_pattern(n: int, t: int, seed: int) -> DeletionPattern:
    if not 0 <= t <= n:
        raise ValueError(f"cannot delete {t} of {n} positions")
    return DeletionPattern(tuple(sorted(random.Random(seed).sample(range(1, n + 1), t))))
