"""
Kazhdan-Lusztig polynomials P_{x,y}(q) for the symmetric group.

Two independent computations are provided.  The production path is the
classical recursion on a right descent of y, fully memoized in a
:class:`KLCache`.  The second path inverts R-polynomials; it exists so
the two can be cross-checked against each other on small groups.

Conventions: P_{x,y} = 0 unless x <= y in Bruhat order, P_{y,y} = 1, and
for x < y the degree is at most (l(y) - l(x) - 1) / 2 with constant term
1 and nonnegative coefficients.  These facts are asserted on every value
the recursion produces rather than assumed.
"""
from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from functools import lru_cache

from .errors import SizeMismatchError
from .perm import Perm, bruhat_leq, format_perm, length, parse_perm, symmetric_group


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in one variable q; coeffs[d] is the q^d coefficient."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        trimmed = tuple(self.coeffs)
        while trimmed and trimmed[-1] == 0:
            trimmed = trimmed[:-1]
        object.__setattr__(self, "coeffs", trimmed)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def coeff(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(tuple(x + (b[i] if i < len(b) else 0)
                                   for i, x in enumerate(a)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + other.times(-1)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def times(self, scalar: int) -> "IntPolynomial":
        return IntPolynomial(tuple(scalar * c for c in self.coeffs))

    def shifted(self, k: int) -> "IntPolynomial":
        """Multiply by q^k."""
        if self.is_zero or k == 0:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def truncated(self, max_degree: int) -> "IntPolynomial":
        """Drop all terms of degree above max_degree."""
        if max_degree < 0:
            return ZERO
        return IntPolynomial(self.coeffs[:max_degree + 1])

    def mirrored(self, top: int) -> "IntPolynomial":
        """q^top * p(1/q); requires degree <= top."""
        if self.is_zero:
            return ZERO
        if self.degree() > top:
            raise ValueError("mirror degree below polynomial degree")
        out = [0] * (top + 1)
        for d, c in enumerate(self.coeffs):
            out[top - d] = c
        return IntPolynomial(tuple(out))

    def __call__(self, value: int) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                body = str(abs(c))
            else:
                power = "q" if d == 1 else f"q^{d}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            terms.append(("-" if c < 0 else "+", body))
        sign, first = terms[0]
        text = ("-" if sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


ZERO = IntPolynomial(())
ONE = IntPolynomial((1,))
Q = IntPolynomial((0, 1))

CACHE_FORMAT_VERSION = 1


class KLCache:
    """Memo table for P_{x,y} over a single symmetric group S_n.

    Lookups are referentially transparent: a stored polynomial is
    immutable and is returned as-is forever after.  The table itself is
    a plain dict, so use one writer at a time (or one cache per worker).
    Persistence uses write-to-temp-then-rename so a crash cannot leave a
    torn file.
    """

    def __init__(self, n: int):
        self.n = n
        self._table: dict[tuple[Perm, Perm], IntPolynomial] = {}
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._table)

    def get(self, x: Perm, y: Perm) -> IntPolynomial | None:
        value = self._table.get((x, y))
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, x: Perm, y: Perm, p: IntPolynomial) -> None:
        self._table[(x, y)] = p

    def stats(self) -> dict[str, int]:
        return {"n": self.n, "entries": len(self._table),
                "hits": self.hits, "misses": self.misses}

    def save(self, path: str) -> None:
        doc = {
            "n": self.n,
            "format_version": CACHE_FORMAT_VERSION,
            "table": {
                f"{format_perm(x)}|{format_perm(y)}": list(p.coeffs)
                for (x, y), p in sorted(self._table.items())
            },
        }
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                json.dump(doc, handle, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    @classmethod
    def load(cls, path: str) -> "KLCache":
        with open(path) as handle:
            doc = json.load(handle)
        if doc.get("format_version") != CACHE_FORMAT_VERSION:
            raise ValueError(f"unsupported cache format in {path}")
        cache = cls(doc["n"])
        for key, coeffs in doc["table"].items():
            x_text, y_text = key.split("|")
            cache._table[(parse_perm(x_text), parse_perm(y_text))] = \
                IntPolynomial(tuple(coeffs))
        return cache


def cache_path_for(base_path: str, n: int) -> str:
    """Per-n cache file derived from a base path: kl.json -> kl.s4.json."""
    stem, ext = os.path.splitext(base_path)
    return f"{stem}.s{n}{ext or '.json'}"


def _check_same_size(x: Perm, y: Perm) -> None:
    if len(x) != len(y):
        raise SizeMismatchError(
            f"permutations have different sizes {len(x)} and {len(y)}")


@lru_cache(maxsize=None)
def _perms_with_lengths(n: int) -> tuple[tuple[Perm, int], ...]:
    return tuple((v, length(v)) for v in symmetric_group(n))


def kl_polynomial(x: Perm, y: Perm, cache: KLCache | None = None) -> IntPolynomial:
    """
    The Kazhdan-Lusztig polynomial P_{x,y}(q).

    >>> str(kl_polynomial((1, 3, 2, 4), (3, 4, 1, 2)))
    '1 + q'
    >>> str(kl_polynomial((4, 3, 2, 1), (1, 2, 3, 4)))
    '0'
    """
    x, y = tuple(x), tuple(y)
    _check_same_size(x, y)
    if cache is None:
        cache = KLCache(len(x))
    return _kl(x, y, cache)


def _kl(x: Perm, y: Perm, cache: KLCache) -> IntPolynomial:
    if x == y:
        return ONE
    if not bruhat_leq(x, y):
        return ZERO
    known = cache.get(x, y)
    if known is not None:
        return known

    n = len(y)
    # Right descent of y: a position i with y_i > y_{i+1} (0-based scan).
    i = next(k for k in range(n - 1) if y[k] > y[k + 1])
    ys = y[:i] + (y[i + 1], y[i]) + y[i + 2:]
    xs = x[:i] + (x[i + 1], x[i]) + x[i + 2:]
    c = 1 if x[i] > x[i + 1] else 0

    p = _kl(xs, ys, cache).shifted(1 - c) + _kl(x, ys, cache).shifted(c)

    ly = length(y)
    lys = ly - 1
    for z, lz in _perms_with_lengths(n):
        if z[i] <= z[i + 1]:
            continue
        gap = lys - lz
        if gap <= 0 or gap % 2 == 0:
            continue
        if not (bruhat_leq(x, z) and bruhat_leq(z, ys)):
            continue
        mu = _kl(z, ys, cache).coeff((gap - 1) // 2)
        if mu:
            p = p - _kl(x, z, cache).times(mu).shifted((ly - lz) // 2)

    lx = length(x)
    assert p.coeff(0) == 1, f"P_{x},{y} has constant term {p.coeff(0)}"
    assert all(coeff >= 0 for coeff in p.coeffs), f"negative coefficient in P_{x},{y}"
    assert 2 * p.degree() <= ly - lx - 1, f"degree bound violated for P_{x},{y}"
    cache.put(x, y, p)
    return p


def kl_at_one(x: Perm, y: Perm, cache: KLCache | None = None) -> int:
    """P_{x,y}(1); this is the multiplicity appearing in the immanant sum."""
    return kl_polynomial(x, y, cache)(1)


def mu_coefficient(x: Perm, y: Perm, cache: KLCache | None = None) -> int:
    """The mu-coefficient: coefficient of q^((l(y)-l(x)-1)/2) in P_{x,y}."""
    gap = length(y) - length(x)
    if gap <= 0 or gap % 2 == 0:
        return 0
    return kl_polynomial(x, y, cache).coeff((gap - 1) // 2)


# ---------------------------------------------------------------------------
# Independent route: invert R-polynomials.


@lru_cache(maxsize=None)
def r_polynomial(x: Perm, y: Perm) -> IntPolynomial:
    """
    The R-polynomial R_{x,y}(q), by the standard recursion on a right
    descent of y.

    >>> str(r_polynomial((1, 2), (2, 1)))
    '-1 + q'
    """
    _check_same_size(x, y)
    if x == y:
        return ONE
    if not bruhat_leq(x, y):
        return ZERO
    i = next(k for k in range(len(y) - 1) if y[k] > y[k + 1])
    ys = y[:i] + (y[i + 1], y[i]) + y[i + 2:]
    xs = x[:i] + (x[i + 1], x[i]) + x[i + 2:]
    if x[i] > x[i + 1]:
        return r_polynomial(xs, ys)
    return (Q - ONE) * r_polynomial(x, ys) + Q * r_polynomial(xs, ys)


def kl_table_via_r(y: Perm) -> dict[Perm, IntPolynomial]:
    """
    All P_{z,y} for z <= y, computed by downward induction from the
    defining identity q^(l(y)-l(z)) P_{z,y}(1/q) = sum over z <= w <= y
    of R_{z,w} P_{w,y}.  The low-degree half of the right side determines
    P_{z,y}; the mirrored high half is verified as a consistency check.
    """
    y = tuple(y)
    below = sorted((z for z in symmetric_group(len(y)) if bruhat_leq(z, y)),
                   key=length, reverse=True)
    table: dict[Perm, IntPolynomial] = {y: ONE}
    ly = length(y)
    for z in below:
        if z == y:
            continue
        total = ZERO
        for w, p_w in table.items():
            if bruhat_leq(z, w):
                total = total + r_polynomial(z, w) * p_w
        gap = ly - length(z)
        p = total.truncated((gap - 1) // 2).times(-1)
        if p.mirrored(gap) - p != total:
            raise ArithmeticError(
                f"R-polynomial inversion is inconsistent at z={z}, y={y}")
        table[z] = p
    return table


def kl_polynomial_via_r(x: Perm, y: Perm) -> IntPolynomial:
    """P_{x,y} through the R-polynomial route (cross-check path, small n)."""
    x, y = tuple(x), tuple(y)
    _check_same_size(x, y)
    if not bruhat_leq(x, y):
        return ZERO
    return kl_table_via_r(y)[x]
