"""
Graphs of upper Bruhat intervals and their combinatorics.

The central object is the union of permutation graphs over an interval
[v, w_0], drawn in an n x n grid with rows increasing downward and
columns increasing rightward (matrix convention).  A cell is a pair
(row, col), 1-indexed.  Grids carry weakly increasing row and column
labels drawn from [m]; when none are supplied the identity labels
(1, ..., n) are used, which makes the unlabeled theory a special case of
the labeled one.

Cells are stored as a frozenset of pairs plus per-row bitmasks, so set
algebra, support queries, and the largest-square dynamic program all
work off the same immutable value.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import (
    PatternPreconditionError,
    PreconditionError,
    SizeGuardError,
)
from .perm import (
    Perm,
    avoids,
    bruhat_interval_to_top,
    compose,
    delete_entry,
    is_in_maximal_parabolic,
    longest_element,
    non_inversions,
)

Cell = tuple[int, int]

# Patterns whose avoidance makes the determinantal immanant formula valid.
FORBIDDEN_PATTERNS: tuple[Perm, Perm] = ((1, 3, 2, 4), (2, 1, 4, 3))


def as_multiset(entries: Iterable[int], m: int | None = None) -> tuple[int, ...]:
    """Sort a collection of labels into a weakly increasing tuple over [m]."""
    ms = tuple(sorted(entries))
    if m is not None:
        if any(not 1 <= e <= m for e in ms):
            raise ValueError(f"labels {ms} not all in [1, {m}]")
    elif any(e < 1 for e in ms):
        raise ValueError(f"labels {ms} must be positive")
    return ms


def multichoose(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """All weakly increasing n-tuples over [m]."""
    return itertools.combinations_with_replacement(range(1, m + 1), n)


def label_patterns(n: int, max_labels: int) -> list[tuple[int, ...]]:
    """
    Canonical representatives of weakly increasing label tuples up to the
    pattern of equalities: one tuple per composition of n into at most
    max_labels parts, using the smallest possible labels.

    >>> label_patterns(3, 3)
    [(1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 3)]
    """
    out = []
    for cut_set in itertools.chain.from_iterable(
            itertools.combinations(range(1, n), k) for k in range(n)):
        if len(cut_set) + 1 > max_labels:
            continue
        labels = []
        current = 1
        for pos in range(1, n + 1):
            labels.append(current)
            if pos in cut_set:
                current += 1
        out.append(tuple(labels))
    return sorted(out)


@dataclass(frozen=True)
class LabeledGrid:
    """A subset of [n]^2 with weakly increasing row and column labels."""

    n: int
    cells: frozenset[Cell]
    row_labels: tuple[int, ...]
    col_labels: tuple[int, ...]
    _row_masks: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.row_labels) != self.n or len(self.col_labels) != self.n:
            raise ValueError("labels must have length n")
        for labels in (self.row_labels, self.col_labels):
            if any(a > b for a, b in zip(labels, labels[1:])):
                raise ValueError(f"labels must be weakly increasing: {labels}")
        masks = [0] * (self.n + 1)
        for (i, j) in self.cells:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"cell {(i, j)} outside [{self.n}]^2")
            masks[i] |= 1 << j
        object.__setattr__(self, "_row_masks", tuple(masks))

    def has_cell(self, i: int, j: int) -> bool:
        return bool(self._row_masks[i] >> j & 1)

    def with_labels(self, row_labels: Sequence[int],
                    col_labels: Sequence[int]) -> "LabeledGrid":
        return LabeledGrid(self.n, self.cells,
                           tuple(row_labels), tuple(col_labels))

    def to_doc(self) -> dict:
        return {
            "n": self.n,
            "cells": sorted(list(c) for c in self.cells),
            "row_labels": list(self.row_labels),
            "col_labels": list(self.col_labels),
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "LabeledGrid":
        return cls(doc["n"], frozenset(tuple(c) for c in doc["cells"]),
                   tuple(doc["row_labels"]), tuple(doc["col_labels"]))


def grid(n: int, cells: Iterable[Cell],
         row_labels: Sequence[int] | None = None,
         col_labels: Sequence[int] | None = None) -> LabeledGrid:
    """Build a LabeledGrid, defaulting to identity labels."""
    rows = tuple(row_labels) if row_labels is not None else tuple(range(1, n + 1))
    cols = tuple(col_labels) if col_labels is not None else tuple(range(1, n + 1))
    return LabeledGrid(n, frozenset(cells), rows, cols)


def permutation_graph(v: Perm) -> frozenset[Cell]:
    """The graph of v as a function: {(i, v_i)}."""
    return frozenset((i, x) for i, x in enumerate(v, start=1))


@lru_cache(maxsize=None)
def _upper_interval_cells(v: Perm) -> frozenset[Cell]:
    cells = set(permutation_graph(v))
    for (k, l) in non_inversions(v):
        lo, hi = v[k - 1], v[l - 1]
        cells.update((i, j)
                     for i in range(k, l + 1) for j in range(lo, hi + 1))
    return frozenset(cells)


def graph_of_upper_interval(v: Perm,
                            row_labels: Sequence[int] | None = None,
                            col_labels: Sequence[int] | None = None) -> LabeledGrid:
    """
    The union of graphs of all u >= v: the graph of v together with every
    cell sandwiched by one of its non-inversions.

    >>> sorted(graph_of_upper_interval((2, 4, 1, 3)).cells)[:3]
    [(1, 2), (1, 3), (1, 4)]
    """
    return grid(len(v), _upper_interval_cells(tuple(v)), row_labels, col_labels)


def graph_of_interval_bruteforce(v: Perm) -> LabeledGrid:
    """
    Oracle for :func:`graph_of_upper_interval`: enumerate the interval
    [v, w_0] directly and union the permutation graphs.  Guarded at
    n <= 7 because it walks all of S_n.
    """
    if len(v) > 7:
        raise SizeGuardError("brute-force interval graphs are guarded at n <= 7")
    cells: set[Cell] = set()
    for u in bruhat_interval_to_top(v):
        cells |= permutation_graph(u)
    return grid(len(v), cells)


def is_sandwiched(point: Cell, v: Perm, ni: tuple[int, int]) -> bool:
    """
    Does the point lie inside the rectangle spanned by the two graph
    points of the non-inversion <k, l>?  The point must not itself lie
    on the graph of v.
    """
    k, l = ni
    if not (1 <= k < l <= len(v) and v[k - 1] < v[l - 1]):
        raise ValueError(f"<{k}, {l}> is not a non-inversion of {v}")
    i, j = point
    if point in permutation_graph(v):
        raise PreconditionError(f"point {point} lies on the graph of {v}")
    return k <= i <= l and v[k - 1] <= j <= v[l - 1]


def largest_square(P: LabeledGrid) -> int:
    """
    Side of the largest contiguous axis-aligned square block of cells
    fully contained in P; 0 for the empty grid.

    >>> largest_square(graph_of_upper_interval((2, 4, 1, 3)))
    2
    """
    n = P.n
    best = 0
    prev = [0] * (n + 1)
    for i in range(1, n + 1):
        current = [0] * (n + 1)
        for j in range(1, n + 1):
            if P.has_cell(i, j):
                current[j] = 1 + min(prev[j], current[j - 1], prev[j - 1])
                if current[j] > best:
                    best = current[j]
        prev = current
    return best


def squares_match_noninversions(v: Perm) -> bool:
    """
    Self-check: the largest square in the upper-interval graph equals one
    plus the best min(j - i, v_j - v_i) over non-inversions <i, j> (zero
    when there is none).
    """
    gaps = [min(j - i, v[j - 1] - v[i - 1]) for (i, j) in non_inversions(v)]
    predicted = 1 + (max(gaps) if gaps else 0)
    return largest_square(graph_of_upper_interval(v)) == predicted


def row_support(P: LabeledGrid, r: int) -> frozenset[int]:
    """Columns c with (r, c) in P."""
    if not 1 <= r <= P.n:
        raise IndexError(f"row {r} out of range for size {P.n}")
    mask = P._row_masks[r]
    return frozenset(c for c in range(1, P.n + 1) if mask >> c & 1)


def col_support(P: LabeledGrid, c: int) -> frozenset[int]:
    """Rows r with (r, c) in P."""
    if not 1 <= c <= P.n:
        raise IndexError(f"column {c} out of range for size {P.n}")
    return frozenset(r for r in range(1, P.n + 1) if P.has_cell(r, c))


def is_admissible(P: LabeledGrid) -> bool:
    """
    No two rows with equal labels share their support, and likewise for
    columns.  This is exactly the condition for the restricted
    repeated-row/column matrix to have no two identical rows or columns
    forced by the labeling.
    """
    for labels, support in ((P.row_labels, row_support),
                            (P.col_labels, col_support)):
        seen: set[tuple[int, frozenset[int]]] = set()
        for idx in range(1, P.n + 1):
            key = (labels[idx - 1], support(P, idx))
            if key in seen:
                return False
            seen.add(key)
    return True


def _order_preserving_reindex(n: int, deleted: frozenset[int]) -> dict[int, int]:
    mapping = {}
    new = 0
    for old in range(1, n + 1):
        if old not in deleted:
            new += 1
            mapping[old] = new
    return mapping


def delete_rows_cols(P: LabeledGrid, I: Iterable[int],
                     J: Iterable[int]) -> LabeledGrid:
    """
    Delete rows I and columns J, reindexing the survivors by the unique
    order-preserving maps.  Labels travel with their surviving rows and
    columns.
    """
    rows_gone = frozenset(I)
    cols_gone = frozenset(J)
    if len(rows_gone) != len(cols_gone):
        raise ValueError("must delete equally many rows and columns")
    if any(not 1 <= i <= P.n for i in rows_gone | cols_gone):
        raise IndexError("deletion index out of range")
    row_map = _order_preserving_reindex(P.n, rows_gone)
    col_map = _order_preserving_reindex(P.n, cols_gone)
    cells = frozenset((row_map[i], col_map[j]) for (i, j) in P.cells
                      if i not in rows_gone and j not in cols_gone)
    row_labels = tuple(P.row_labels[i - 1] for i in range(1, P.n + 1)
                       if i not in rows_gone)
    col_labels = tuple(P.col_labels[j - 1] for j in range(1, P.n + 1)
                       if j not in cols_gone)
    return LabeledGrid(P.n - len(rows_gone), cells, row_labels, col_labels)


# ---------------------------------------------------------------------------
# Bounding boxes.

Color = str  # "red", "green", "blue", or "purple"


@dataclass(frozen=True)
class BoundingBox:
    """
    A square region with one corner on the permutation graph and two on
    the antidiagonal.  ``corners`` lists the graph points that span the
    region (two of them exactly when the region is purple).
    """

    rows: tuple[int, int]
    cols: tuple[int, int]
    corners: tuple[Cell, ...]
    color: Color

    @property
    def corner(self) -> Cell:
        return self.corners[0]

    def side(self) -> int:
        return self.rows[1] - self.rows[0] + 1

    def contains(self, other: "BoundingBox") -> bool:
        return (self.rows[0] <= other.rows[0] and other.rows[1] <= self.rows[1]
                and self.cols[0] <= other.cols[0] and other.cols[1] <= self.cols[1])

    def cells(self) -> frozenset[Cell]:
        return frozenset((i, j)
                         for i in range(self.rows[0], self.rows[1] + 1)
                         for j in range(self.cols[0], self.cols[1] + 1))


def _box_extent(n: int, i: int, vi: int) -> tuple[tuple[int, int], tuple[int, int]]:
    r2 = n - vi + 1
    c2 = n - i + 1
    return (min(i, r2), max(i, r2)), (min(vi, c2), max(vi, c2))


def bounding_boxes(v: Perm) -> list[BoundingBox]:
    """
    The maximal boxes anchored at graph points, ordered by northmost row.
    A corner strictly above the antidiagonal colors its box blue, below
    colors it red, on the antidiagonal green; a region spanned from both
    sides at once is purple.
    """
    n = len(v)
    extents: dict[tuple, list[Cell]] = {}
    for i, vi in enumerate(v, start=1):
        extents.setdefault(_box_extent(n, i, vi), []).append((i, vi))
    regions = list(extents.items())
    maximal = []
    for ext, corners in regions:
        if any(other != ext
               and other[0][0] <= ext[0][0] and ext[0][1] <= other[0][1]
               and other[1][0] <= ext[1][0] and ext[1][1] <= other[1][1]
               for other, _ in regions):
            continue
        sides = {(-1 if i + j < n + 1 else (1 if i + j > n + 1 else 0))
                 for (i, j) in corners}
        if sides == {-1}:
            color = "blue"
        elif sides == {1}:
            color = "red"
        elif sides == {0}:
            color = "green"
        else:
            color = "purple"
        maximal.append(BoundingBox(ext[0], ext[1], tuple(sorted(corners)), color))
    return sorted(maximal, key=lambda b: b.rows[0])


def spanning_corners(v: Perm) -> frozenset[Cell]:
    """Graph points that span some maximal bounding box."""
    return frozenset(c for box in bounding_boxes(v) for c in box.corners)


def boxes_alternate(v: Perm) -> bool:
    """
    Under the stated hypotheses (v avoids 2143 and w_0 v is not inside a
    maximal parabolic), the bounding boxes, read from the top, must
    alternate strictly between blue and red with no purple box.  A single
    box passes vacuously.  Hypothesis failures raise, so a sweep can tell
    them apart from genuine violations.
    """
    if not avoids(v, (2, 1, 4, 3)):
        raise PatternPreconditionError(f"{v} contains the pattern 2143")
    if is_in_maximal_parabolic(compose(longest_element(len(v)), v)):
        raise PreconditionError(
            f"w0 * {v} lies in a maximal parabolic subgroup")
    boxes = bounding_boxes(v)
    if len(boxes) <= 1:
        return True
    colors = [b.color for b in boxes]
    if any(c not in ("blue", "red") for c in colors):
        return False
    return all(a != b for a, b in zip(colors, colors[1:]))


# ---------------------------------------------------------------------------
# Young-diagram recognition.


def durfee(parts: Sequence[int]) -> int:
    """
    Size of the largest square contained in the Young diagram.

    >>> durfee((3, 3, 1)), durfee(()), durfee((4, 4, 4, 4))
    (2, 0, 4)
    """
    best = 0
    for s, part in enumerate(parts, start=1):
        if part >= s:
            best = s
    return best


def young_shape(P: LabeledGrid) -> tuple[int, ...] | None:
    """
    If the cells are exactly {(i, j) : j <= lambda_i} for a weakly
    decreasing lambda, return lambda (with trailing zeros, length n);
    otherwise None.
    """
    parts = []
    for i in range(1, P.n + 1):
        mask = P._row_masks[i]
        width = mask.bit_length() - 1 if mask else 0
        if mask and mask != ((1 << width) - 1) << 1:
            return None  # row is not a left-justified run starting in column 1
        parts.append(width)
    if any(a < b for a, b in zip(parts, parts[1:])):
        return None
    return tuple(parts)


def complement_young_shape(P: LabeledGrid) -> tuple[int, ...] | None:
    """
    If the cells are the complement of a Young diagram mu in the n x n
    box, i.e. {(i, j) : j > mu_i}, return mu; otherwise None.
    """
    n = P.n
    parts = []
    for i in range(1, n + 1):
        mask = P._row_masks[i]
        count = mask.bit_count()
        expected = ((1 << count) - 1) << (n - count + 1) if count else 0
        if mask != expected:
            return None  # row is not a right-justified run ending in column n
        parts.append(n - count)
    if any(a < b for a, b in zip(parts, parts[1:])):
        return None
    return tuple(parts)


def young_diagram_grid(parts: Sequence[int], n: int,
                       row_labels: Sequence[int] | None = None,
                       col_labels: Sequence[int] | None = None) -> LabeledGrid:
    """The grid {(i, j) : j <= lambda_i} inside [n]^2."""
    padded = _validated_partition(parts, n)
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, padded[i - 1] + 1)]
    return grid(n, cells, row_labels, col_labels)


def young_complement_grid(parts: Sequence[int], n: int,
                          row_labels: Sequence[int] | None = None,
                          col_labels: Sequence[int] | None = None) -> LabeledGrid:
    """The grid {(i, j) : j > mu_i} inside [n]^2, for mu = parts."""
    padded = _validated_partition(parts, n)
    cells = [(i, j) for i in range(1, n + 1) for j in range(padded[i - 1] + 1, n + 1)]
    return grid(n, cells, row_labels, col_labels)


def _validated_partition(parts: Sequence[int], n: int) -> tuple[int, ...]:
    padded = tuple(parts) + (0,) * (n - len(parts))
    if len(padded) != n:
        raise ValueError(f"partition {tuple(parts)} has more than {n} parts")
    if any(p < 0 or p > n for p in padded):
        raise ValueError(f"partition {tuple(parts)} does not fit in a {n}x{n} box")
    if any(a < b for a, b in zip(padded, padded[1:])):
        raise ValueError(f"parts must be weakly decreasing: {tuple(parts)}")
    return padded


# ---------------------------------------------------------------------------
# Block-antidiagonal structure and deletions.


def block_antidiagonal_split(P: LabeledGrid) -> tuple[int, LabeledGrid, LabeledGrid] | None:
    """
    If the cells fit inside an upper-right block of size n - j and a
    lower-left block of size j for some minimal j, return j and the two
    blocks reindexed to their own coordinates, labels carried along.
    Returns None when no such split exists.
    """
    n = P.n
    for j in range(1, n):
        s = n - j
        if all((r <= s and c > j) or (r > s and c <= j) for (r, c) in P.cells):
            upper = LabeledGrid(
                s,
                frozenset((r, c - j) for (r, c) in P.cells if r <= s),
                P.row_labels[:s], P.col_labels[j:])
            lower = LabeledGrid(
                j,
                frozenset((r - s, c) for (r, c) in P.cells if r > s),
                P.row_labels[s:], P.col_labels[:j])
            return j, upper, lower
    return None


def cells_sandwiched_only_by(v: Perm, i: int) -> frozenset[Cell]:
    """
    Cells outside the graph of v whose every sandwiching non-inversion
    involves position i.  These are exactly the cells that disappear from
    the upper-interval graph when v_i is deleted from the word.
    """
    nis = non_inversions(v)
    out = set()
    graph_cells = permutation_graph(v)
    for cell in _upper_interval_cells(tuple(v)) - graph_cells:
        r, c = cell
        witnesses = [(k, l) for (k, l) in nis
                     if k <= r <= l and v[k - 1] <= c <= v[l - 1]]
        if witnesses and all(i in (k, l) for (k, l) in witnesses):
            out.add(cell)
    return frozenset(out)


def deletion_pruned_grid_identity(v: Perm, i: int) -> bool:
    """
    Deleting v_i from the word matches, at the level of grids, removing
    row i, column v_i, and the cells sandwiched only through position i.
    """
    x = delete_entry(v, i)
    pruned = grid(len(v),
                  _upper_interval_cells(tuple(v)) - cells_sandwiched_only_by(v, i))
    reduced = delete_rows_cols(pruned, {i}, {v[i - 1]})
    return reduced.cells == _upper_interval_cells(x)


def deletion_grid_identity(v: Perm, i: int) -> bool:
    """
    The stronger statement available when (i, v_i) spans no maximal box:
    plain row/column deletion of the upper-interval graph already gives
    the graph for the shortened word.
    """
    x = delete_entry(v, i)
    reduced = delete_rows_cols(graph_of_upper_interval(v), {i}, {v[i - 1]})
    return reduced.cells == _upper_interval_cells(x)
