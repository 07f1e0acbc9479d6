"""Closed-form height and weight partitions of D_r(a_k), by regime.

Regimes for the height partition:

* k = 0 (regular orbit): a multiset difference.
* r = 2k + 2: one formula per height j = 1..2k+1.
* 2k + 2 < r <= 4k + 3: first height table.
* r > 4k + 3: second height table.

The first table's second row is printed with ``+1``; the tabulated sizes
only agree with root enumeration with ``-1`` (this is also what the r = 2k+3
base case of the induction gives), so ``-1`` is used and the ``+1`` version
stays available as ``printed=True`` for the verifier to report on.

The weight partition has a single formula valid for every (r, k).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .grading import OrbitSpec
from .partition import IntPartition, mdiff, msum
from .roots import MIN_RANK


class FormulaSource(str, enum.Enum):
    REGULAR_PROP4 = "Regular_Prop4"
    BOUNDARY_PROP5 = "Boundary_Prop5"
    TABLE1 = "Table1"
    TABLE2 = "Table2"
    THEOREM7 = "Theorem7"
    COR4 = "Cor4"
    COR5 = "Cor5"

    def __str__(self):
        return self.value


def _odds(top):
    """[top, top-2, ..., 1] for odd top >= 1; empty for top < 1."""
    return IntPartition(tuple(range(top, 0, -2))) if top >= 1 else IntPartition()


def _check_rank(r):
    if r < MIN_RANK:
        raise ValueError(f"type D requires r >= {MIN_RANK}, got r={r}")


def regular_height(r):
    """[r, r, r-1, r-1, ..., 1, 1] minus [r, floor(r/2), ceil(r/2)]."""
    _check_rank(r)
    doubled = [x for x in range(r, 0, -1) for _ in range(2)]
    diff, removed = mdiff(doubled, [r, r // 2, (r + 1) // 2])
    if removed != 3:
        raise RuntimeError(f"regular height difference at r={r} removed {removed} of 3 elements")
    return diff


def regular_weight(r):
    """[2r-3, ..., 3, 1] + [r-1]; the exponents of D_r."""
    _check_rank(r)
    return msum(_odds(2 * r - 3), [r - 1])


def boundary_height(k):
    """Height partition of D_{2k+2}(a_k): sizes 4k - j - 2*floor(j/2) + 3 for j = 1..2k+1."""
    if k < 1:
        raise ValueError(f"boundary formula requires k >= 1, got k={k}")
    return IntPartition(tuple(boundary_layer_sizes(k)))


def boundary_layer_sizes(k):
    return [4 * k - j - 2 * (j // 2) + 3 for j in range(1, 2 * k + 2)]


def boundary_weight(k):
    """[2k+1, ..., 3, 1] + [2k+1, ..., 3, 1] + [2k, 2k-1, ..., 1]."""
    if k < 1:
        raise ValueError(f"boundary formula requires k >= 1, got k={k}")
    return msum(_odds(2 * k + 1), _odds(2 * k + 1), range(2 * k, 0, -1))


@dataclass(frozen=True)
class TableRow:
    """One row of a height table: sizes ``formula(j)`` for lo <= j <= hi."""

    label: str
    lo: int
    hi: int
    formula: Callable[[int], int]

    def heights(self):
        return range(self.lo, self.hi + 1)


def table_regime(r, k):
    if k < 1 or r <= 2 * k + 2:
        raise ValueError(
            f"height tables cover k >= 1 and r > 2k+2, got r={r}, k={k}; "
            "use regular_height for k = 0 and boundary_height for r = 2k+2")
    return FormulaSource.TABLE1 if r <= 4 * k + 3 else FormulaSource.TABLE2


def _table1_rows(r, k, printed):
    row2_shift = 1 if printed else -1
    return [
        TableRow("1", 1, r - 2 * k - 2, lambda j: r + 2 * k - 2 * (j // 2)),
        TableRow("2", r - 2 * k - 1, 2 * k + 1, lambda j: 2 * r - j - 2 * (j // 2) + row2_shift),
        TableRow("3", 2 * k + 2, 2 * k + 2, lambda j: 2 * r - 4 * k - 4),
        TableRow("6", 2 * k + 3, r - 1, lambda j: 2 * r - k - j - j // 2 - 1),
        TableRow("7", r, 2 * r - 2 * k - 3, lambda j: r - k - j // 2 - 1),
    ]


def _table2_rows(r, k):
    return [
        TableRow("1", 1, 2 * k + 1, lambda j: r + 2 * k - 2 * (j // 2)),
        TableRow("4", 2 * k + 2, 2 * k + 2, lambda j: r - 1),
        TableRow("5", 2 * k + 3, r - 2 * k - 2, lambda j: r + k - j // 2),
        TableRow("6", r - 2 * k - 1, r - 1, lambda j: 2 * r - k - j - j // 2 - 1),
        TableRow("7", r, 2 * r - 2 * k - 3, lambda j: r - k - j // 2 - 1),
    ]


def table_rows(r, k, printed=False):
    """Rows of the height table that applies to (r, k).

    ``printed=True`` selects the ``+1`` variant of the first table's second
    row; it has no effect on the second table.
    """
    if table_regime(r, k) is FormulaSource.TABLE1:
        return _table1_rows(r, k, printed)
    return _table2_rows(r, k)


def _evaluate_rows(rows):
    sizes = {}
    for row in rows:
        for j in row.heights():
            if j in sizes:
                raise RuntimeError(f"height {j} covered by two table rows")
            sizes[j] = row.formula(j)
    return sizes


def table_layer_sizes(r, k, printed=False):
    """Mapping height j -> tabulated layer size."""
    return _evaluate_rows(table_rows(r, k, printed))


def table_height(r, k, printed=False):
    return IntPartition(tuple(table_layer_sizes(r, k, printed).values()))


def range_gaps(rows, top):
    """Heights in 1..top covered by no row, and heights covered more than once."""
    cover = {}
    for row in rows:
        for j in row.heights():
            cover[j] = cover.get(j, 0) + 1
    missing = [j for j in range(1, top + 1) if j not in cover]
    extra = sorted(j for j, c in cover.items() if c > 1 or not 1 <= j <= top)
    return missing, extra


def theorem_weight(r, k):
    """[1, 3, ..., 2r-2k-3] + [1, 3, ..., 2k-1] + [r-1, r-2, ..., r-2k-1]."""
    spec = OrbitSpec(r, k)
    return msum(_odds(spec.max_height), _odds(2 * k - 1), range(r - 1, r - 2 * k - 2, -1))


def height_closed(spec):
    """Closed-form height partition for ``spec`` and the formula it came from."""
    r, k = spec.r, spec.k
    if k == 0:
        part = regular_height(r)
        # the second table also makes sense at k = 0 and must agree
        cross = IntPartition(tuple(_evaluate_rows(_table2_rows(r, 0)).values()))
        if cross != part:
            raise RuntimeError(f"regular formula {part} disagrees with table at k=0: {cross}")
        return part, FormulaSource.REGULAR_PROP4
    if spec.is_boundary:
        return boundary_height(k), FormulaSource.BOUNDARY_PROP5
    return table_height(r, k), table_regime(r, k)


def closed_layer_sizes(spec):
    """Closed-form size of every height layer, as a list from height 1.

    The regular case uses the second table at k = 0, which is checked
    against the multiset difference in :func:`height_closed`.
    """
    r, k = spec.r, spec.k
    if k == 0:
        sizes = _evaluate_rows(_table2_rows(r, 0))
    elif spec.is_boundary:
        return boundary_layer_sizes(k)
    else:
        sizes = table_layer_sizes(r, k)
    return [sizes[j] for j in range(1, spec.max_height + 1)]
