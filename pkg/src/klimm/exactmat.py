"""
Exact rational matrices and the minor machinery built on them.

Entries are :class:`fractions.Fraction`, so every sign decision in the
positivity tests is exact.  Determinants go through fraction-free
Bareiss elimination on integers after clearing denominators, which keeps
intermediate growth polynomial.  The 0 x 0 determinant is 1; the
two-rows-two-columns-removed form of Lewis Carroll's identity at n = 2
needs exactly that convention.

Generators take explicit seeds and are deterministic given their
arguments.  Total positivity is produced constructively from a product
of elementary lower bidiagonal factors, a positive diagonal, and
elementary upper bidiagonal factors along reduced words of the longest
permutation; matrices that are k-positive but not (k+1)-positive come
from rejection sampling around a totally positive base point, verified
exactly before being returned.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import ShapeError
from .grid import LabeledGrid

Rational = Fraction


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix of Fractions; entry access is 1-indexed."""

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def entry(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> "Matrix":
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if data and any(len(row) != len(data[0]) for row in data):
            raise ShapeError("rows have unequal lengths")
        return cls(data)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n))
                         for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(tuple((Fraction(0),) * cols for _ in range(rows)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} "
                             f"by {other.rows}x{other.cols}")
        cols = tuple(zip(*other.entries))
        return Matrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
            for row in self.entries))

    def to_doc(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "entries": [str(x) for row in self.entries for x in row]}

    @classmethod
    def from_doc(cls, doc: dict) -> "Matrix":
        r, c = doc["rows"], doc["cols"]
        flat = [Fraction(str(x)) for x in doc["entries"]]
        if len(flat) != r * c:
            raise ShapeError(f"expected {r * c} entries, got {len(flat)}")
        return cls(tuple(tuple(flat[i * c:(i + 1) * c]) for i in range(r)))


def _require_square(M: Matrix) -> int:
    if not M.is_square:
        raise ShapeError(f"matrix is {M.rows}x{M.cols}, not square")
    return M.rows


def _bareiss_int_det(rows: list[list[int]]) -> int:
    # Fraction-free elimination: every division below is exact by
    # Sylvester's identity, so all intermediates stay integers.
    n = len(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            row_i = rows[i]
            row_k = rows[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * rows[-1][-1]


def det(M: Matrix) -> Fraction:
    """
    Exact determinant (empty matrix has determinant 1).

    >>> det(Matrix.from_rows([[22, 18, 6], [8, 7, 3], [2, 2, 1]]))
    Fraction(-2, 1)
    """
    n = _require_square(M)
    if n == 0:
        return Fraction(1)
    scale = 1
    int_rows = []
    for row in M.entries:
        denom = lcm(*(x.denominator for x in row))
        scale *= denom
        int_rows.append([int(x * denom) for x in row])
    return Fraction(_bareiss_int_det(int_rows), scale)


def submatrix(M: Matrix, rows: Iterable[int], cols: Iterable[int]) -> Matrix:
    """Rows and columns selected by 1-based indices, in sorted order."""
    row_idx = sorted(set(rows))
    col_idx = sorted(set(cols))
    if any(not 1 <= i <= M.rows for i in row_idx):
        raise IndexError(f"row selection {row_idx} out of range")
    if any(not 1 <= j <= M.cols for j in col_idx):
        raise IndexError(f"column selection {col_idx} out of range")
    return Matrix(tuple(tuple(M.entries[i - 1][j - 1] for j in col_idx)
                        for i in row_idx))


def minor(M: Matrix, rows: Iterable[int], cols: Iterable[int]) -> Fraction:
    """Determinant of the submatrix on the given row and column sets."""
    row_idx = sorted(set(rows))
    col_idx = sorted(set(cols))
    if len(row_idx) != len(col_idx):
        raise ShapeError(
            f"minor needs equally many rows and columns, got "
            f"{len(row_idx)} and {len(col_idx)}")
    return det(submatrix(M, row_idx, col_idx))


def deleted_det(M: Matrix, gone_rows: Iterable[int],
                gone_cols: Iterable[int]) -> Fraction:
    """Determinant after removing the named rows and columns."""
    n = _require_square(M)
    keep_rows = [i for i in range(1, n + 1) if i not in set(gone_rows)]
    keep_cols = [j for j in range(1, n + 1) if j not in set(gone_cols)]
    return minor(M, keep_rows, keep_cols)


def restrict(M: Matrix, P: LabeledGrid) -> Matrix:
    """Zero out every entry outside the grid."""
    n = _require_square(M)
    if P.n != n:
        raise ShapeError(f"grid size {P.n} does not match matrix size {n}")
    zero = Fraction(0)
    return Matrix(tuple(
        tuple(M.entries[i - 1][j - 1] if P.has_cell(i, j) else zero
              for j in range(1, n + 1))
        for i in range(1, n + 1)))


def repeat_submatrix(M: Matrix, R: Sequence[int], C: Sequence[int]) -> Matrix:
    """
    The matrix whose (i, j) entry is M[r_i, c_j] for weakly increasing
    label multisets R and C; repeated labels give repeated rows/columns.
    """
    if len(R) != len(C):
        raise ShapeError("row and column label multisets must have equal size")
    if any(not 1 <= r <= M.rows for r in R):
        raise IndexError(f"row labels {tuple(R)} out of range [1, {M.rows}]")
    if any(not 1 <= c <= M.cols for c in C):
        raise IndexError(f"column labels {tuple(C)} out of range [1, {M.cols}]")
    return Matrix(tuple(tuple(M.entries[r - 1][c - 1] for c in C) for r in R))


def _all_minors_of_size(M: Matrix, s: int):
    n = M.rows
    for rows in itertools.combinations(range(1, n + 1), s):
        for cols in itertools.combinations(range(1, n + 1), s):
            yield minor(M, rows, cols)


def is_k_positive(M: Matrix, k: int) -> bool:
    """
    Are all minors of size at most k strictly positive?  Every minor is
    enumerated; no solid-minor shortcut is assumed because the classical
    criteria are stated for total positivity, not k-positivity.
    """
    n = _require_square(M)
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in [1, {n}], got {k}")
    return all(value > 0
               for s in range(1, k + 1)
               for value in _all_minors_of_size(M, s))


def max_positivity_order(M: Matrix) -> int:
    """Largest k with all minors of size <= k positive; 0 if none."""
    n = _require_square(M)
    for s in range(1, n + 1):
        if not all(value > 0 for value in _all_minors_of_size(M, s)):
            return s - 1
    return n


def _longest_word(n: int) -> list[int]:
    # The reduced word (1)(2 1)(3 2 1)...(n-1 ... 1) for the longest
    # permutation; any reduced word yields total positivity.
    return [i for k in range(1, n) for i in range(k, 0, -1)]


def _elementary(n: int, i: int, t: Fraction, lower: bool) -> Matrix:
    rows = [[Fraction(int(a == b)) for b in range(n)] for a in range(n)]
    if lower:
        rows[i][i - 1] = t
    else:
        rows[i - 1][i] = t
    return Matrix.from_rows(rows)


def gen_totally_positive(n: int, seed: int, verify: bool | None = None) -> Matrix:
    """
    A totally positive n x n matrix with positive rational parameters
    drawn from a seeded generator.  For n <= 6 the result is verified
    minor-by-minor before being returned (override with ``verify``).
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(f"tp:{n}:{seed}")

    def parameter() -> Fraction:
        return Fraction(rng.randint(1, 8), rng.randint(1, 8))

    M = Matrix.from_rows([[parameter() if i == j else 0 for j in range(n)]
                          for i in range(n)])
    for i in _longest_word(n):
        M = _elementary(n, i, parameter(), lower=True) @ M
    for i in reversed(_longest_word(n)):
        M = M @ _elementary(n, i, parameter(), lower=False)
    if verify is None:
        verify = n <= 6
    if verify and not is_k_positive(M, n):
        raise ArithmeticError("generated matrix failed total positivity check")
    return M


def has_nonpositive_minor_of_size(M: Matrix, s: int) -> bool:
    return any(value <= 0 for value in _all_minors_of_size(M, s))


def gen_k_positive_not_higher(n: int, k: int, seed: int,
                              budget: int = 10000) -> Matrix | None:
    """
    Search for a matrix that is k-positive with some (k+1)-minor <= 0, by
    perturbing a totally positive matrix entrywise and verifying each
    candidate exactly.  The base perturbation magnitude is one tenth of
    the smallest entry and is escalated slowly as trials fail; returns
    None when the budget runs out.
    """
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={n}")
    rng = random.Random(f"kpos:{n}:{k}:{seed}")
    base = gen_totally_positive(n, seed=rng.randint(0, 2**30), verify=False)
    smallest = min(x for row in base.entries for x in row)
    for trial in range(budget):
        magnitude = (smallest / 10) * (1 + Fraction(trial, 200))
        candidate = Matrix(tuple(
            tuple(x + magnitude * Fraction(rng.randint(-100, 100), 100)
                  for x in row)
            for row in base.entries))
        if (is_k_positive(candidate, k)
                and has_nonpositive_minor_of_size(candidate, k + 1)):
            return candidate
        if trial % 500 == 499:
            base = gen_totally_positive(n, seed=rng.randint(0, 2**30),
                                        verify=False)
            smallest = min(x for row in base.entries for x in row)
    return None


def lewis_carroll_residual(M: Matrix, a: int, a2: int,
                           b: int, b2: int) -> Fraction:
    """
    det(M) det(M with rows a,a' and columns b,b' removed) minus
    [det(M_a^b) det(M_a'^b') - det(M_a^b') det(M_a'^b)]; identically zero
    for every square matrix.
    """
    n = _require_square(M)
    if n < 2:
        raise ShapeError("matrix must be at least 2x2")
    if not (1 <= a < a2 <= n and 1 <= b < b2 <= n):
        raise IndexError(f"need 1 <= a < a' <= {n} and 1 <= b < b' <= {n}")
    left = det(M) * deleted_det(M, {a, a2}, {b, b2})
    right = (deleted_det(M, {a}, {b}) * deleted_det(M, {a2}, {b2})
             - deleted_det(M, {a}, {b2}) * deleted_det(M, {a2}, {b}))
    return left - right


def antidiagonal_transpose(M: Matrix) -> Matrix:
    """
    Reflect across the antidiagonal (conjugate the transpose by the
    reversal permutation matrix).  Preserves the determinant, every minor
    up to relabeling, and hence k-positivity for every k.
    """
    n = _require_square(M)
    return Matrix(tuple(
        tuple(M.entries[n - 1 - j][n - 1 - i] for j in range(n))
        for i in range(n)))


def bar(J: Sequence[int], m: int) -> tuple[int, ...]:
    """
    The label multiset reflected inside [m]: each j becomes m + 1 - j,
    re-sorted increasingly.  This is how row/column labels transform
    under antidiagonal transposition.

    >>> bar((2, 3, 4), 4)
    (1, 2, 3)
    """
    if any(not 1 <= j <= m for j in J):
        raise ValueError(f"labels {tuple(J)} not all in [1, {m}]")
    return tuple(sorted(m + 1 - j for j in J))
