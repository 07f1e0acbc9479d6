"""Integer partitions as sorted multisets: sum, saturating difference, transpose."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass


@dataclass(frozen=True, slots=True)
class IntPartition:
    """A non-increasing tuple of positive integers.

    Any iterable of positive integers is accepted and sorted; the stored
    ``parts`` are always canonical so equality is plain tuple equality.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(sorted(self.parts, reverse=True))
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool):
                raise TypeError(f"partition parts must be ints, got {p!r}")
            if p <= 0:
                raise ValueError(f"partition parts must be positive, got {p}")
        object.__setattr__(self, "parts", parts)

    @property
    def total(self):
        return sum(self.parts)

    @property
    def num_parts(self):
        return len(self.parts)

    @property
    def largest(self):
        return self.parts[0] if self.parts else 0

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __add__(self, other):
        return msum(self, other)

    def __str__(self):
        return " ".join(map(str, self.parts))

    def __repr__(self):
        return f"IntPartition({list(self.parts)})"

    def to_list(self):
        return list(self.parts)

    def transpose(self):
        return transpose(self)


def _as_partition(p):
    return p if isinstance(p, IntPartition) else IntPartition(tuple(p))


def msum(*parts):
    """Multiset union: multiplicities add."""
    out = []
    for p in parts:
        out.extend(_as_partition(p).parts)
    return IntPartition(tuple(out))


def mdiff(a, b):
    """Saturating multiset difference ``a - b``.

    Each element of ``b`` removes one matching copy from ``a`` if there is
    one and is ignored otherwise. Returns ``(difference, removed_count)``.
    """
    remaining = Counter(_as_partition(a).parts)
    removed = 0
    for x in _as_partition(b).parts:
        if remaining[x] > 0:
            remaining[x] -= 1
            removed += 1
    return IntPartition(tuple(remaining.elements())), removed


def transpose(p):
    """Conjugate partition: part j counts the parts of ``p`` that are >= j."""
    parts = _as_partition(p).parts
    if not parts:
        return IntPartition()
    out = []
    n = len(parts)
    # parts is non-increasing, so the count of parts >= j only shrinks as j grows
    for j in range(1, parts[0] + 1):
        while n and parts[n - 1] < j:
            n -= 1
        out.append(n)
    return IntPartition(tuple(out))
