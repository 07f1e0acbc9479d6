"""Dynkin grading of D_r by the semiregular orbit D_r(a_k).

The semisimple element h is recorded only through its weighted Dynkin
diagram: alpha_j(h) is 0 for j = 3, 5, ..., 2k+1 and 2 for every other node.
A positive root sum m_j alpha_j then sits at height sum of m_j over the
weight-2 nodes, and the layer sizes over positive heights give the height
partition. The weight partition is its transpose.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from types import MappingProxyType

from .partition import IntPartition, transpose
from .roots import MIN_RANK, Root, root_system


@dataclass(frozen=True, order=True)
class OrbitSpec:
    """The orbit D_r(a_k), valid for r >= 4 and 0 <= k < floor(r/2)."""

    r: int
    k: int

    def __post_init__(self):
        for name, v in (("r", self.r), ("k", self.k)):
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"{name} must be an int, got {v!r}")
        if self.r < MIN_RANK:
            raise ValueError(f"require r >= {MIN_RANK} for type D, got r={self.r}")
        if not 0 <= self.k < self.r // 2:
            raise ValueError(
                f"require 0 <= k < floor(r/2) = {self.r // 2}, got r={self.r}, k={self.k}")

    @property
    def max_height(self):
        return 2 * self.r - 2 * self.k - 3

    @property
    def is_boundary(self):
        return self.r == 2 * self.k + 2

    def so2r_partition(self):
        """Jordan type of the orbit in so_{2r}: [2r-2k-1, 2k+1]."""
        return IntPartition((2 * self.r - 2 * self.k - 1, 2 * self.k + 1))

    def __str__(self):
        return f"D_{self.r}(a_{self.k})"


def valid_specs(r_max, r_min=MIN_RANK):
    """All valid (r, k) with r_min <= r <= r_max, r ascending then k ascending."""
    for r in range(max(r_min, MIN_RANK), r_max + 1):
        for k in range(r // 2):
            yield OrbitSpec(r, k)


@dataclass(frozen=True)
class WeightedDiagram:
    weights: tuple[int, ...]

    def __post_init__(self):
        if any(w not in (0, 2) for w in self.weights):
            raise ValueError(f"distinguished diagrams have weights in {{0, 2}}: {self.weights}")

    @property
    def rank(self):
        return len(self.weights)

    def zeros(self):
        return [j for j, w in enumerate(self.weights, start=1) if w == 0]

    def __str__(self):
        return " ".join(map(str, self.weights))


def dynkin_weights(spec):
    zero = {2 * m + 1 for m in range(1, spec.k + 1)}
    return WeightedDiagram(tuple(0 if j in zero else 2 for j in range(1, spec.r + 1)))


def height(beta, d):
    """Half of beta(h): the coefficient sum over weight-2 nodes."""
    if beta.rank != d.rank:
        raise ValueError(f"rank mismatch: root has rank {beta.rank}, diagram {d.rank}")
    return sum(m for m, w in zip(beta.coeffs, d.weights) if w == 2)


@dataclass(frozen=True)
class HeightLayers:
    """Positive roots grouped by height; layer 0 holds the zero-weight simple roots."""

    spec: OrbitSpec
    layers: dict

    @property
    def max_height(self):
        return max(self.layers)

    def layer(self, i):
        return self.layers.get(i, ())

    def sizes(self):
        """Layer sizes for heights 1..max_height, in height order."""
        return [len(self.layer(i)) for i in range(1, self.max_height + 1)]


@lru_cache(maxsize=None)
def height_layers(spec):
    d = dynkin_weights(spec)
    buckets = {}
    for beta in root_system(spec.r).sorted_roots():
        buckets.setdefault(height(beta, d), []).append(beta)
    return HeightLayers(spec, MappingProxyType({i: tuple(v) for i, v in sorted(buckets.items())}))


def height_partition(spec):
    return IntPartition(tuple(height_layers(spec).sizes()))


def weight_partition_bruteforce(spec):
    return transpose(height_partition(spec))


def divisible_count(spec, i):
    """Number of roots at height i that alpha_r divides."""
    layers = height_layers(spec)
    if not 1 <= i <= layers.max_height:
        raise ValueError(f"height {i} out of range 1..{layers.max_height} for {spec}")
    system = root_system(spec.r)
    a_r = Root.simple(spec.r, spec.r)
    return sum(1 for beta in layers.layer(i) if system.divides(a_r, beta))


def divisible_counts(spec):
    """divisible_count for every positive height, as a list indexed from height 1."""
    return [divisible_count(spec, i) for i in range(1, spec.max_height + 1)]
