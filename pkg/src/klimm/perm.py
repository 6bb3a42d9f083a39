"""
Permutations of [n] = {1, ..., n} in one-line notation.

A permutation v is a tuple (v_1, ..., v_n) of distinct integers from [n];
``v[i - 1]`` is the image of i.  Everything is 1-indexed to match the
usual drawing conventions for permutation graphs, and every operation is
a pure function returning fresh immutable tuples, so values can be shared
freely across memo tables and worker threads.

The text form used by the CLI is comma-separated ("2,4,1,3"); for n <= 9
the compact digit string "2413" is also accepted.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import SizeGuardError, SizeMismatchError

Perm = tuple[int, ...]


def is_permutation_word(word: Sequence[int]) -> bool:
    """
    Check that word is a permutation of [n] where n = len(word).

    >>> [is_permutation_word(w) for w in [(), (1,), (2, 1), (2, 2), (0, 1)]]
    [True, True, True, False, False]
    """
    return sorted(word) == list(range(1, len(word) + 1))


def as_perm(word: Iterable[int]) -> Perm:
    """Validate and freeze a one-line word, raising ValueError if invalid."""
    v = tuple(word)
    if not is_permutation_word(v):
        raise ValueError(f"not a permutation of [{len(v)}]: {v}")
    return v


def identity(n: int) -> Perm:
    """
    >>> identity(4)
    (1, 2, 3, 4)
    """
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Perm:
    """
    The longest permutation w_0 = (n, n-1, ..., 1).

    >>> longest_element(4)
    (4, 3, 2, 1)
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    return tuple(range(n, 0, -1))


def length(v: Perm) -> int:
    """
    Coxeter length = number of inversion pairs (i < j with v_i > v_j).

    >>> length((1, 2, 3, 4)), length((4, 3, 2, 1)), length((2, 4, 1, 3))
    (0, 6, 3)
    """
    n = len(v)
    return sum(1 for i in range(n) for j in range(i + 1, n) if v[i] > v[j])


def non_inversions(v: Perm) -> list[tuple[int, int]]:
    """
    All pairs <i, j> with i < j and v_i < v_j, in lexicographic order.

    >>> non_inversions((2, 4, 1, 3))
    [(1, 2), (1, 4), (3, 4)]
    """
    n = len(v)
    return [(i + 1, j + 1)
            for i in range(n) for j in range(i + 1, n) if v[i] < v[j]]


def compose(u: Perm, v: Perm) -> Perm:
    """
    Composition (u o v)(i) = u(v(i)).

    >>> compose((4, 3, 2, 1), (2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    if len(u) != len(v):
        raise SizeMismatchError(
            f"cannot compose permutations of sizes {len(u)} and {len(v)}")
    return tuple(u[x - 1] for x in v)


def inverse(v: Perm) -> Perm:
    """
    >>> inverse((2, 4, 1, 3))
    (3, 1, 4, 2)
    """
    inv = [0] * len(v)
    for i, x in enumerate(v, start=1):
        inv[x - 1] = i
    return tuple(inv)


@lru_cache(maxsize=None)
def _prefix_dominance(v: Perm) -> tuple[int, int, int]:
    # Pack the prefix counts D[i][t] = #{j <= i : v_j <= t} into one big
    # integer, one digit per (i, t) pair.  With an offset bit added to
    # every digit, "D_x >= D_y entrywise" becomes a single subtraction
    # plus mask test: no digit of (hi_x - lo_y) borrows, and the offset
    # bit survives exactly in the digits where x's count >= y's count.
    n = len(v)
    width = 4 if n <= 7 else 8
    offset = 1 << (width - 1)
    lo = hi = mask = 0
    shift = 0
    counts = [0] * (n + 1)
    for i in range(n):
        for t in range(v[i], n + 1):
            counts[t] += 1
        for t in range(1, n + 1):
            d = counts[t]
            lo |= d << shift
            hi |= (offset + d) << shift
            mask |= offset << shift
            shift += width
    return lo, hi, mask


def bruhat_leq(x: Perm, y: Perm) -> bool:
    """
    Bruhat order via the sorted-prefix criterion: x <= y iff for every i
    the sorted set {x_1, ..., x_i} is entrywise <= the sorted set
    {y_1, ..., y_i}, equivalently every prefix of x has at least as many
    values <= t as the same prefix of y, for every threshold t.

    >>> bruhat_leq((2, 1, 4, 3), (3, 4, 1, 2))
    True
    >>> bruhat_leq((3, 4, 1, 2), (2, 1, 4, 3))
    False
    """
    if len(x) != len(y):
        raise SizeMismatchError(
            f"cannot compare permutations of sizes {len(x)} and {len(y)}")
    _, hi_x, mask = _prefix_dominance(x)
    lo_y, _, _ = _prefix_dominance(y)
    return (hi_x - lo_y) & mask == mask


def pattern_occurs(v: Perm, p: Perm) -> bool:
    """
    Does some subsequence of v have the same relative order as p?

    >>> pattern_occurs((5, 2, 1, 4, 3), (2, 1, 4, 3))
    True
    >>> pattern_occurs((2, 4, 1, 3), (1, 3, 2, 4))
    False
    """
    m = len(p)
    if m > len(v):
        raise ValueError("pattern is longer than the host permutation")
    for positions in itertools.combinations(range(len(v)), m):
        sub = [v[i] for i in positions]
        ranks = sorted(sub)
        if all(ranks[p[k] - 1] == sub[k] for k in range(m)):
            return True
    return False


def avoids(v: Perm, *patterns: Perm) -> bool:
    """True iff none of the patterns occurs in v (longer patterns cannot)."""
    return not any(pattern_occurs(v, p)
                   for p in patterns if len(p) <= len(v))


def delete_entry(v: Perm, i: int) -> Perm:
    """
    Remove v_i from the one-line word and close the gaps: position
    indices above i and values above v_i each shift down by one.

    >>> delete_entry((6, 2, 7, 8, 5, 3, 1, 4), 2)
    (5, 6, 7, 4, 2, 1, 3)
    >>> delete_entry((2, 4, 1, 3), 1)
    (3, 1, 2)
    """
    if not 1 <= i <= len(v):
        raise IndexError(f"position {i} out of range for size {len(v)}")
    vi = v[i - 1]
    return tuple(x - 1 if x > vi else x
                 for pos, x in enumerate(v, start=1) if pos != i)


def is_in_maximal_parabolic(w: Perm) -> bool:
    """
    True iff w fixes some proper initial segment setwise, i.e. some
    1 <= j < n has w([j]) = [j].

    >>> is_in_maximal_parabolic((2, 1, 3, 4))
    True
    >>> is_in_maximal_parabolic((4, 3, 2, 1))
    False
    """
    top = 0
    for j in range(1, len(w)):
        top = max(top, w[j - 1])
        if top == j:
            return True
    return False


def symmetric_group(n: int) -> Iterator[Perm]:
    """All permutations of [n] in lexicographic order."""
    return itertools.permutations(range(1, n + 1))


def bruhat_interval_to_top(v: Perm, guard: int = 7) -> list[Perm]:
    """All u with v <= u <= w_0, enumerated by brute force (n <= guard)."""
    if len(v) > guard:
        raise SizeGuardError(
            f"brute-force interval enumeration guarded at n <= {guard}")
    return [u for u in symmetric_group(len(v)) if bruhat_leq(v, u)]


def parse_perm(text: str) -> Perm:
    """
    Parse "2,4,1,3" or (for n <= 9) the compact form "2413".

    >>> parse_perm("2,4,1,3") == parse_perm("2413")
    True
    """
    text = text.strip()
    if "," in text:
        word = [int(part) for part in text.split(",")]
    elif text.isdigit():
        word = [int(ch) for ch in text]
    else:
        raise ValueError(f"cannot parse permutation from {text!r}")
    return as_perm(word)


def format_perm(v: Perm) -> str:
    """Compact digits for n <= 9, comma-separated beyond."""
    if len(v) <= 9:
        return "".join(str(x) for x in v)
    return ",".join(str(x) for x in v)
