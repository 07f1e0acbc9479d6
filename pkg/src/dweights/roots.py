"""Positive roots of D_r with the fork at the start of the diagram.

Simple roots are numbered so that alpha_1 and alpha_2 are the two fork nodes,
both attached to alpha_3, and alpha_3, ..., alpha_r form a chain::

    a1
      \\
       a3 - a4 - ... - a_r
      /
    a2

A root is stored as its coefficient vector over (alpha_1, ..., alpha_r).
Three independent constructions of the positive roots are provided: the
explicit families, closure under adding simple roots, and induction on the
rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

MIN_RANK = 4


def _check_rank(r):
    if not isinstance(r, int) or isinstance(r, bool):
        raise TypeError(f"rank must be an int, got {r!r}")
    if r < MIN_RANK:
        raise ValueError(f"type D requires rank r >= {MIN_RANK}, got r={r}")


@dataclass(frozen=True, order=True, slots=True)
class Root:
    """Non-zero non-negative integer combination of simple roots.

    Ordering is lexicographic on the coefficient vector. ``Root`` only checks
    the shape of the vector; membership in a root system is checked by
    :meth:`RootSystemD.root`.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = self.coeffs
        if not isinstance(c, tuple):
            object.__setattr__(self, "coeffs", c := tuple(c))
        if not c or not any(c):
            raise ValueError("a root cannot be the zero vector")
        if any(m not in (0, 1, 2) for m in c):
            raise ValueError(f"root coefficients must lie in {{0, 1, 2}}: {c}")
        if c[0] > 1 or (len(c) > 1 and c[1] > 1) or c[-1] > 1:
            raise ValueError(f"coefficients of alpha_1, alpha_2, alpha_r must be 0 or 1: {c}")

    @classmethod
    def simple(cls, i, r):
        if not 1 <= i <= r:
            raise ValueError(f"simple root index {i} out of range 1..{r}")
        return cls(tuple(1 if t == i else 0 for t in range(1, r + 1)))

    @property
    def rank(self):
        return len(self.coeffs)

    @property
    def level(self):
        """Sum of all coefficients."""
        return sum(self.coeffs)

    def __getitem__(self, i):
        """Coefficient of alpha_i, 1-based."""
        return self.coeffs[i - 1]

    def __add__(self, other):
        if not isinstance(other, Root):
            return NotImplemented
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return Root(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def embed(self, r):
        """The same root viewed inside D_r for r >= rank (zero padding)."""
        if r < self.rank:
            raise ValueError(f"cannot embed a rank {self.rank} root into rank {r}")
        return Root(self.coeffs + (0,) * (r - self.rank))

    def __str__(self):
        terms = []
        for i, m in enumerate(self.coeffs, start=1):
            if m:
                terms.append(f"a{i}" if m == 1 else f"{m}a{i}")
        return "+".join(terms)


def _neighbours(j, r):
    if j in (1, 2):
        return (3,)
    if j == 3:
        return (1, 2, 4) if r > 3 else (1, 2)
    return (j - 1, j + 1) if j < r else (j - 1,)


def cartan_pairing(i, j, r):
    """<alpha_i, alpha_j> for the D_r diagram: 2 on the diagonal, -1 on edges, else 0."""
    _check_rank(r)
    if not (1 <= i <= r and 1 <= j <= r):
        raise ValueError(f"simple root indices must lie in 1..{r}, got ({i}, {j})")
    if i == j:
        return 2
    return -1 if i in _neighbours(j, r) else 0


def pairing(beta, j):
    """<beta, alpha_j> = sum_i m_i <alpha_i, alpha_j>."""
    r = beta.rank
    if not 1 <= j <= r:
        raise ValueError(f"simple root index {j} out of range 1..{r}")
    c = beta.coeffs
    return 2 * c[j - 1] - sum(c[i - 1] for i in _neighbours(j, r))


def _from_indices(r, ones=(), twos=()):
    c = [0] * r
    for t in ones:
        c[t - 1] = 1
    for t in twos:
        c[t - 1] = 2
    return Root(tuple(c))


def _family_roots(r):
    yield _from_indices(r, ones=[1])
    for i in range(1, r):
        for j in range(i + 1, r + 1):
            yield _from_indices(r, ones=range(i + 1, j + 1))
    for i in range(3, r + 1):
        for j in range(i + 1, r + 1):
            yield _from_indices(r, ones=[1, 2, *range(i + 1, j + 1)], twos=range(3, i + 1))
    for j in range(3, r + 1):
        yield _from_indices(r, ones=range(1, j + 1))
        yield _from_indices(r, ones=[1, *range(3, j + 1)])


def generate_by_family(r):
    """Positive roots from the four explicit families plus alpha_1.

    Raises ``RuntimeError`` if two families produce the same root, which
    would mean an index range is wrong.
    """
    _check_rank(r)
    out = set()
    for beta in _family_roots(r):
        if beta in out:
            raise RuntimeError(f"duplicate root {beta} in family generation for r={r}")
        out.add(beta)
    return frozenset(out)


def generate_by_closure(r):
    """Close the simple roots under beta -> beta + alpha_j whenever <beta, alpha_j> < 0."""
    _check_rank(r)
    simple = [Root.simple(j, r) for j in range(1, r + 1)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for beta in frontier:
            for j in range(1, r + 1):
                if pairing(beta, j) < 0:
                    gamma = beta + simple[j - 1]
                    if gamma not in seen:
                        seen.add(gamma)
                        nxt.append(gamma)
        frontier = nxt
    return frozenset(seen)


def highest_root(r):
    """alpha_1 + alpha_2 + 2(alpha_3 + ... + alpha_{r-1}) + alpha_r."""
    _check_rank(r)
    return _from_indices(r, ones=[1, 2, r], twos=range(3, r))


@dataclass(frozen=True)
class RootSystemD:
    """The positive roots of D_r together with the highest root."""

    rank: int
    positive_roots: frozenset
    highest_root: Root

    def __post_init__(self):
        r = self.rank
        _check_rank(r)
        if len(self.positive_roots) != r * r - r:
            raise ValueError(
                f"D_{r} has {r * r - r} positive roots, got {len(self.positive_roots)}")
        if any(not isinstance(b, Root) or b.rank != r for b in self.positive_roots):
            raise ValueError(f"every positive root must be a rank {r} Root")
        if self.highest_root != highest_root(r) or self.highest_root not in self.positive_roots:
            raise ValueError(f"highest root of D_{r} missing or wrong: {self.highest_root}")

    @classmethod
    def from_roots(cls, r, roots: Iterable[Root]):
        return cls(r, frozenset(roots), highest_root(r))

    def __contains__(self, beta):
        return beta in self.positive_roots

    def __iter__(self):
        return iter(self.sorted_roots())

    def __len__(self):
        return len(self.positive_roots)

    def sorted_roots(self):
        return sorted(self.positive_roots)

    def simple_root(self, j):
        return Root.simple(j, self.rank)

    def root(self, coeffs):
        """Build a Root and check that it is a positive root of this system."""
        beta = Root(tuple(coeffs))
        if beta not in self.positive_roots:
            raise ValueError(f"{coeffs} is not a positive root of D_{self.rank}")
        return beta

    def divides(self, alpha, beta):
        """alpha | beta iff beta - alpha is a positive root or zero."""
        for x in (alpha, beta):
            if x not in self.positive_roots:
                raise ValueError(f"{x} is not a positive root of D_{self.rank}")
        diff = tuple(b - a for a, b in zip(alpha.coeffs, beta.coeffs))
        if not any(diff):
            return True
        if min(diff) < 0:
            return False
        return _is_root_vector(diff, self.positive_roots)


def _is_root_vector(diff, roots):
    try:
        return Root(diff) in roots
    except ValueError:
        return False


@lru_cache(maxsize=None)
def root_system(r) -> RootSystemD:
    """Cached D_r built from the explicit families."""
    return RootSystemD.from_roots(r, generate_by_family(r))


def divides(alpha, beta, system=None):
    if alpha.rank != beta.rank:
        raise ValueError(f"rank mismatch: {alpha.rank} vs {beta.rank}")
    if system is None:
        system = root_system(alpha.rank)
    return system.divides(alpha, beta)


def extend_rank(phi):
    """Build D_{r+1} from D_r by induction on the rank.

    The new system is the union of the old roots, alpha_{r+1}, the roots
    beta + alpha_{r+1} with alpha_r | beta, and the two roots
    gamma_r + alpha_{r+1} and gamma_r + alpha_r + alpha_{r+1}.
    """
    if not isinstance(phi, RootSystemD):
        raise ValueError(f"expected a RootSystemD, got {type(phi).__name__}")
    r = phi.rank
    m = r + 1
    a_r = Root.simple(r, r)
    a_new = Root.simple(m, m)
    gamma = phi.highest_root.embed(m)
    out = {beta.embed(m) for beta in phi.positive_roots}
    out.add(a_new)
    out.update(beta.embed(m) + a_new for beta in phi.positive_roots if phi.divides(a_r, beta))
    out.add(gamma + a_new)
    out.add(gamma + Root.simple(r, m) + a_new)
    return RootSystemD.from_roots(m, out)


def extend_to(r, start=None):
    """Iterate :func:`extend_rank` from D_4 (or ``start``) up to D_r."""
    _check_rank(r)
    phi = start if start is not None else RootSystemD.from_roots(MIN_RANK, generate_by_family(MIN_RANK))
    if phi.rank > r:
        raise ValueError(f"start rank {phi.rank} exceeds target rank {r}")
    while phi.rank < r:
        phi = extend_rank(phi)
    return phi
