"""
Verification suites and conjecture searches.

Each suite sweeps one structural fact over an exhaustive or sampled case
list and produces a :class:`SuiteReport`.  Reports are deterministic
given (config, seed): case keys are generated in a fixed order, every
random draw is keyed off the seed and the case key, and wall time is
kept off the serialized document so identical runs produce identical
bytes.

A failed case always carries a fully serialized witness (matrix
included), so any finding can be re-checked independently of this
process; searches re-verify a witness from its own serialization before
recording it.
"""
from __future__ import annotations

import itertools
import json
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

from . import fixtures
from .exactmat import (
    Matrix,
    gen_k_positive_not_higher,
    gen_totally_positive,
    is_k_positive,
    lewis_carroll_residual,
    repeat_submatrix,
)
from .grid import (
    FORBIDDEN_PATTERNS,
    block_antidiagonal_split,
    bounding_boxes,
    boxes_alternate,
    deletion_grid_identity,
    durfee,
    graph_of_interval_bruteforce,
    graph_of_upper_interval,
    label_patterns,
    largest_square,
    spanning_corners,
    squares_match_noninversions,
    young_complement_grid,
)
from .immanant import (
    deletion_det_identity,
    dual_canonical_eval,
    factor_block_antidiagonal,
    imm_definition,
    imm_determinantal,
    lewis_carroll_sign_probe,
    young_complement_sign_law,
    young_sign_law,
)
from .klpoly import KLCache, cache_path_for
from .perm import (
    Perm,
    avoids,
    compose,
    format_perm,
    identity,
    is_in_maximal_parabolic,
    longest_element,
    parse_perm,
    symmetric_group,
)

MAX_N_HARD_LIMIT = 7


@dataclass
class Config:
    """Run parameters; unset fields fall back to per-suite defaults."""

    max_n: int | None = None
    max_m: int | None = None
    samples: int | None = None
    seed: int = 0
    kl_cache_path: str | None = None
    k: int | None = None  # pin the positivity order in searches

    def __post_init__(self):
        if self.max_n is not None and not 1 <= self.max_n <= MAX_N_HARD_LIMIT:
            raise ValueError(f"max_n must lie in [1, {MAX_N_HARD_LIMIT}]")
        if self.k is not None and self.k < 1:
            raise ValueError("k must be positive")
        if self.max_m is not None and self.max_m < 1:
            raise ValueError("max_m must be positive")
        if self.samples is not None and self.samples < 1:
            raise ValueError("samples must be positive")


@dataclass
class SuiteReport:
    """Outcome of one suite or search run."""

    suite: str
    params: dict
    cases_run: int
    cases_passed: int
    counterexamples: list[dict]
    wall_time: float
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        if bool(self.counterexamples) != (self.cases_passed < self.cases_run):
            raise ValueError(
                "report invariant violated: counterexamples must be "
                "recorded exactly for the failed cases")

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_doc(self) -> dict:
        # Wall time deliberately omitted: documents must be byte-identical
        # across runs with the same config and seed.
        return {
            "suite": self.suite,
            "params": self.params,
            "cases_run": self.cases_run,
            "cases_passed": self.cases_passed,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_doc(), sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        header = ("suite,seed,max_n,max_m,samples,"
                  "cases_run,cases_passed,counterexamples")
        row = ",".join(str(x) for x in (
            self.suite, self.params.get("seed"), self.params.get("max_n"),
            self.params.get("max_m"), self.params.get("samples"),
            self.cases_run, self.cases_passed, len(self.counterexamples)))
        return header + "\n" + row + "\n"


Case = tuple[str, bool, dict | None]


def _case_rng(seed: int, suite: str, key: str) -> random.Random:
    return random.Random(f"{seed}:{suite}:{key}")


def _random_rational_matrix(n: int, rng: random.Random) -> Matrix:
    return Matrix.from_rows(
        [[Fraction(rng.randint(-999, 999), rng.randint(1, 50))
          for _ in range(n)] for _ in range(n)])


def _k_positive_samples(m: int, k: int, tag: str, count: int) -> list[Matrix]:
    """
    Deterministic verified k-positive matrices of size m: the sharp
    fixture when it applies, one strictly-k sample when the budget finds
    it, then totally positive fill.
    """
    out: list[Matrix] = []
    if m == 4 and k <= 2:
        out.append(fixtures.TWO_POSITIVE_NOT_THREE)
    if k < m and len(out) < count:
        strict = gen_k_positive_not_higher(m, k, seed=f"{tag}:strict", budget=300)
        if strict is not None:
            out.append(strict)
    index = 0
    while len(out) < count:
        out.append(gen_totally_positive(m, seed=f"{tag}:tp{index}"))
        index += 1
    out = out[:count]
    for M in out:
        if not is_k_positive(M, k):
            raise ArithmeticError("sampled matrix failed its positivity check")
    return out


@lru_cache(maxsize=None)
def _avoiders(n: int, patterns: tuple[Perm, ...]) -> tuple[Perm, ...]:
    return tuple(v for v in symmetric_group(n) if avoids(v, *patterns))


@lru_cache(maxsize=None)
def _partitions_in_box(n: int) -> tuple[tuple[int, ...], ...]:
    """All weakly decreasing tuples (with trailing zeros) inside n^n."""
    shapes = []
    for combo in itertools.combinations_with_replacement(range(n, -1, -1), n):
        shapes.append(tuple(combo))
    return tuple(sorted(shapes, reverse=True))


def _random_multiset(m: int, n: int, rng: random.Random) -> tuple[int, ...]:
    return tuple(sorted(rng.choices(range(1, m + 1), k=n)))


class _KLCaches:
    """Per-n caches, optionally persisted under a base path."""

    def __init__(self, base_path: str | None):
        self.base_path = base_path
        self._caches: dict[int, KLCache] = {}

    def for_n(self, n: int) -> KLCache:
        if n not in self._caches:
            cache = None
            if self.base_path:
                path = cache_path_for(self.base_path, n)
                if os.path.exists(path):
                    cache = KLCache.load(path)
            self._caches[n] = cache or KLCache(n)
        return self._caches[n]

    def persist(self) -> None:
        if not self.base_path:
            return
        for n, cache in self._caches.items():
            if len(cache):
                cache.save(cache_path_for(self.base_path, n))


# ---------------------------------------------------------------------------
# Suite case generators.  Each yields (case_key, passed, witness_or_None).


def _suite_interval_graph(config: Config, caches: _KLCaches,
                          notes: dict) -> Iterator[Case]:
    max_n = config.max_n or 7
    for n in range(1, max_n + 1):
        for v in symmetric_group(n):
            key = f"n={n}:v={format_perm(v)}"
            passed = (graph_of_upper_interval(v).cells
                      == graph_of_interval_bruteforce(v).cells)
            yield key, passed, None if passed else {"v": format_perm(v)}


def _suite_squares(config: Config, caches: _KLCaches,
                   notes: dict) -> Iterator[Case]:
    max_n = config.max_n or 7
    for n in range(1, max_n + 1):
        for v in symmetric_group(n):
            key = f"n={n}:v={format_perm(v)}"
            passed = squares_match_noninversions(v)
            yield key, passed, None if passed else {"v": format_perm(v)}


def _suite_box_cover(config: Config, caches: _KLCaches,
                     notes: dict) -> Iterator[Case]:
    max_n = config.max_n or 7
    for n in range(1, max_n + 1):
        for v in symmetric_group(n):
            key = f"n={n}:v={format_perm(v)}"
            cover: set = set()
            for box in bounding_boxes(v):
                cover |= box.cells()
            passed = graph_of_upper_interval(v).cells <= cover
            yield key, passed, None if passed else {"v": format_perm(v)}


def _suite_alternation(config: Config, caches: _KLCaches,
                       notes: dict) -> Iterator[Case]:
    max_n = config.max_n or 7
    for n in range(1, max_n + 1):
        w0 = longest_element(n)
        for v in _avoiders(n, ((2, 1, 4, 3),)):
            if is_in_maximal_parabolic(compose(w0, v)):
                continue
            key = f"n={n}:v={format_perm(v)}"
            passed = boxes_alternate(v)
            if passed:
                yield key, True, None
            else:
                boxes = bounding_boxes(v)
                yield key, False, {"v": format_perm(v),
                                   "colors": [b.color for b in boxes]}


def _suite_determinantal_formula(config: Config, caches: _KLCaches,
                                 notes: dict) -> Iterator[Case]:
    max_n = config.max_n or 5
    samples = config.samples or 3
    for n in range(1, max_n + 1):
        cache = caches.for_n(n)
        for v in _avoiders(n, FORBIDDEN_PATTERNS):
            for s in range(samples):
                key = f"n={n}:v={format_perm(v)}:s={s}"
                rng = _case_rng(config.seed, "prop-3.1", key)
                M = _random_rational_matrix(n, rng)
                lhs = imm_definition(v, M, cache)
                rhs = imm_determinantal(v, M)
                passed = lhs == rhs
                witness = None if passed else {
                    "v": format_perm(v), "matrix": M.to_doc(),
                    "definition": str(lhs), "determinantal": str(rhs)}
                yield key, passed, witness


def _suite_lewis_carroll(config: Config, caches: _KLCaches,
                         notes: dict) -> Iterator[Case]:
    samples = config.samples or 200
    for t in range(samples):
        n = 2 + t % 5  # sizes 2 through 6
        key = f"t={t:04d}:n={n}"
        rng = _case_rng(config.seed, "prop-3.2", key)
        M = _random_rational_matrix(n, rng)
        a = rng.randint(1, n - 1)
        a2 = rng.randint(a + 1, n)
        b = rng.randint(1, n - 1)
        b2 = rng.randint(b + 1, n)
        residual = lewis_carroll_residual(M, a, a2, b, b2)
        passed = residual == 0
        witness = None if passed else {
            "matrix": M.to_doc(), "rows": [a, a2], "cols": [b, b2],
            "residual": str(residual)}
        yield key, passed, witness


def _suite_block_factorization(config: Config, caches: _KLCaches,
                               notes: dict) -> Iterator[Case]:
    max_n = config.max_n or 6
    samples = config.samples or 3
    for n in range(2, max_n + 1):
        for v in _avoiders(n, FORBIDDEN_PATTERNS):
            if block_antidiagonal_split(graph_of_upper_interval(v)) is None:
                continue
            for s in range(samples):
                key = f"n={n}:v={format_perm(v)}:s={s}"
                rng = _case_rng(config.seed, "prop-4.1", key)
                M = _random_rational_matrix(n, rng)
                product = factor_block_antidiagonal(v, M)
                direct = imm_determinantal(v, M)
                passed = product == direct
                witness = None if passed else {
                    "v": format_perm(v), "matrix": M.to_doc(),
                    "product": str(product), "direct": str(direct)}
                yield key, passed, witness


def _suite_deletion(config: Config, caches: _KLCaches,
                    notes: dict) -> Iterator[Case]:
    max_n = config.max_n or 5
    samples = config.samples or 3
    for n in range(2, max_n + 1):
        for v in _avoiders(n, FORBIDDEN_PATTERNS):
            corners = spanning_corners(v)
            for i in range(1, n + 1):
                if (i, v[i - 1]) not in corners:
                    key = f"n={n}:v={format_perm(v)}:i={i}:grid"
                    passed = deletion_grid_identity(v, i)
                    yield key, passed, None if passed else {
                        "v": format_perm(v), "i": i,
                        "failure": "grid deletion mismatch"}
                for s in range(samples):
                    key = f"n={n}:v={format_perm(v)}:i={i}:s={s}"
                    rng = _case_rng(config.seed, "deletion", key)
                    M = _random_rational_matrix(n - 1, rng)
                    passed = deletion_det_identity(v, i, M)
                    yield key, passed, None if passed else {
                        "v": format_perm(v), "i": i, "matrix": M.to_doc()}


def _suite_young(config: Config, caches: _KLCaches,
                 notes: dict) -> Iterator[Case]:
    n = config.max_n or 4
    m = config.max_m or 4
    samples = config.samples or 5
    patterns = label_patterns(n, m)
    for shape in _partitions_in_box(n):
        shape_text = ",".join(str(p) for p in shape)
        direct_k = max(1, durfee(shape))
        comp_k = max(1, largest_square(young_complement_grid(shape, n)))
        direct_mats = _k_positive_samples(
            m, direct_k, f"{config.seed}:young:{shape_text}:d", samples)
        comp_mats = _k_positive_samples(
            m, comp_k, f"{config.seed}:young:{shape_text}:c", samples)
        for R in patterns:
            for C in patterns:
                for s in range(samples):
                    key = (f"shape={shape_text}:direct:R={R}:C={C}:s={s}")
                    passed = young_sign_law(shape, R, C, direct_mats[s])
                    yield key, passed, None if passed else {
                        "shape": list(shape), "R": list(R), "C": list(C),
                        "matrix": direct_mats[s].to_doc(), "variant": "direct"}
                    key = (f"shape={shape_text}:complement:R={R}:C={C}:s={s}")
                    passed = young_complement_sign_law(shape, R, C, comp_mats[s])
                    yield key, passed, None if passed else {
                        "shape": list(shape), "R": list(R), "C": list(C),
                        "matrix": comp_mats[s].to_doc(),
                        "variant": "complement"}


def _suite_main_sq(config: Config, caches: _KLCaches,
                   notes: dict) -> Iterator[Case]:
    n = config.max_n or 4
    m = config.max_m or 4
    samples = config.samples or 5
    patterns = label_patterns(n, m)
    for v in _avoiders(n, FORBIDDEN_PATTERNS):
        k = largest_square(graph_of_upper_interval(v))
        mats = _k_positive_samples(
            m, k, f"{config.seed}:main-sq:{format_perm(v)}", samples)
        for R in patterns:
            for C in patterns:
                for s, M in enumerate(mats):
                    key = f"v={format_perm(v)}:R={R}:C={C}:s={s}"
                    result = dual_canonical_eval(v, R, C, M)
                    if result.admissible:
                        passed = result.value > 0
                    else:
                        passed = result.value == 0
                    yield key, passed, None if passed else {
                        "v": format_perm(v), "R": list(R), "C": list(C),
                        "matrix": M.to_doc(), "value": str(result.value),
                        "admissible": result.admissible, "k": k}


def _suite_sign_probe(config: Config, caches: _KLCaches,
                      notes: dict) -> Iterator[Case]:
    max_n = config.max_n or 5
    samples = config.samples or 2
    skipped = 0
    for n in range(3, max_n + 1):
        patterns = label_patterns(n, n)
        for v in _avoiders(n, FORBIDDEN_PATTERNS):
            boxes = bounding_boxes(v)
            if len(boxes) < 2:
                continue
            last, second = boxes[-1], boxes[-2]
            if (n, v[n - 1]) not in last.corners or len(second.corners) != 1:
                continue
            a, va = second.corners[0]
            if not (a < n and 1 < va < v[n - 1]):
                continue
            k = largest_square(graph_of_upper_interval(v))
            mats = _k_positive_samples(
                n, k, f"{config.seed}:sgn:{format_perm(v)}", samples)
            for R in patterns:
                for C in patterns:
                    for s, M in enumerate(mats):
                        key = f"n={n}:v={format_perm(v)}:R={R}:C={C}:s={s}"
                        report = lewis_carroll_sign_probe(v, R, C, M)
                        if not report.hypotheses_met:
                            skipped += 1
                            continue
                        passed = not report.violated
                        yield key, passed, None if passed else {
                            "v": format_perm(v), "R": list(R), "C": list(C),
                            "matrix": M.to_doc(), "probe": report.to_doc()}
    notes["preconditions_not_met"] = skipped


SUITES: dict[str, Callable[[Config, _KLCaches, dict], Iterator[Case]]] = {
    "lemma-2.11": _suite_interval_graph,
    "lemma-2.12": _suite_squares,
    "lemma-2.16": _suite_box_cover,
    "prop-2.17": _suite_alternation,
    "prop-3.1": _suite_determinantal_formula,
    "prop-3.2": _suite_lewis_carroll,
    "prop-4.1": _suite_block_factorization,
    "deletion": _suite_deletion,
    "young": _suite_young,
    "main-sq": _suite_main_sq,
    "sgn-probe": _suite_sign_probe,
}

SUITE_DESCRIPTIONS = {
    "lemma-2.11": "interval graph equals its sandwiching description",
    "lemma-2.12": "largest square matches the non-inversion gap bound",
    "lemma-2.16": "interval graph is covered by its bounding boxes",
    "prop-2.17": "bounding boxes alternate blue/red when hypotheses hold",
    "prop-3.1": "defining sum agrees with the determinantal formula",
    "prop-3.2": "two-rows-two-columns determinant identity has zero residual",
    "prop-4.1": "block-antidiagonal graphs factor the immanant",
    "deletion": "word deletion matches grid row/column deletion",
    "young": "sign laws for Young-diagram grids and their complements",
    "main-sq": "signed value positive iff the labeled grid is admissible",
    "sgn-probe": "two-term sign relation around the last two boxes",
}


def run_suite(name: str, config: Config) -> SuiteReport:
    """Run one verification suite and assemble its deterministic report."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{sorted(SUITES)}")
    caches = _KLCaches(config.kl_cache_path)
    notes = {"description": SUITE_DESCRIPTIONS[name]}
    start = time.perf_counter()
    results = sorted(SUITES[name](config, caches, notes),
                     key=lambda case: case[0])
    elapsed = time.perf_counter() - start
    caches.persist()
    counterexamples = [
        {"case": key, **witness}
        for key, passed, witness in results if not passed and witness]
    return SuiteReport(
        suite=name,
        params={
            "max_n": config.max_n, "max_m": config.max_m,
            "samples": config.samples, "seed": config.seed,
            "k": config.k,
        },
        cases_run=len(results),
        cases_passed=sum(1 for _, passed, _ in results if passed),
        counterexamples=counterexamples,
        wall_time=elapsed,
        notes=notes,
    )


# ---------------------------------------------------------------------------
# Conjecture searches.  These only ever report; they never claim a proof.


def _increasing_pattern(k: int) -> Perm:
    return identity(k)


def _search_plain_immanant(config: Config, caches: _KLCaches,
                           notes: dict) -> Iterator[Case]:
    # For sampled (n, k, v) with v avoiding the increasing pattern of
    # length k+1, the plain immanant should be positive on verified
    # k-positive matrices.
    cases = config.samples or 1000
    max_n = config.max_n or 4
    if config.k is not None and config.k + 1 > max_n:
        raise ValueError(f"pinned k={config.k} needs max_n > k")
    for t in range(cases):
        key = f"t={t:05d}"
        rng = _case_rng(config.seed, "search-5.1", key)
        if config.k is not None:
            k = config.k
            n = rng.randint(k + 1, max_n)
        else:
            n = rng.randint(2, max_n)
            k = rng.randint(1, n - 1)
        pool = _avoiders(n, (_increasing_pattern(k + 1),))
        v = pool[rng.randrange(len(pool))]
        M = _k_positive_samples(n, k, f"{config.seed}:5.1:{t}", 1)[0]
        value = imm_definition(v, M, caches.for_n(n))
        passed = value > 0
        witness = None
        if not passed:
            witness = {"v": format_perm(v), "n": n, "k": k,
                       "matrix": M.to_doc(), "value": str(value),
                       "reverified": _reverify_positive_immanant(
                           format_perm(v), k, M.to_doc())}
        yield key, passed, witness


def _reverify_positive_immanant(v_text: str, k: int, matrix_doc: dict) -> bool:
    """Recheck a witness purely from its serialized form."""
    v = parse_perm(v_text)
    M = Matrix.from_doc(matrix_doc)
    if not is_k_positive(M, k):
        return False  # not a valid witness after all
    return imm_definition(v, M) <= 0


def _search_sign_control(config: Config, caches: _KLCaches,
                         notes: dict) -> Iterator[Case]:
    # Hypothesis source: the proven sufficient condition (avoid 1324 and
    # 2143 with largest square at most k) stands in for "the plain
    # immanant is k-positive", which sampling cannot decide.
    cases = config.samples or 1000
    max_n = config.max_n or 4
    max_m = config.max_m or 4
    for t in range(cases):
        key = f"t={t:05d}"
        rng = _case_rng(config.seed, "search-5.2", key)
        n = rng.randint(2, max_n)
        pool = _avoiders(n, FORBIDDEN_PATTERNS)
        if config.k is not None:
            pool = tuple(
                v for v in pool
                if largest_square(graph_of_upper_interval(v)) <= config.k)
            if not pool:
                continue
        v = pool[rng.randrange(len(pool))]
        k = config.k or largest_square(graph_of_upper_interval(v))
        m = rng.randint(n, max(n, max_m))
        R = _random_multiset(m, n, rng)
        C = _random_multiset(m, n, rng)
        M = _k_positive_samples(m, k, f"{config.seed}:5.2:{t}", 1)[0]
        result = dual_canonical_eval(v, R, C, M)
        if result.admissible:
            passed = result.value > 0
        else:
            passed = result.value == 0
        yield key, passed, None if passed else {
            "v": format_perm(v), "R": list(R), "C": list(C), "k": k,
            "matrix": M.to_doc(), "value": str(result.value),
            "admissible": result.admissible}


def _search_pattern_positivity(config: Config, caches: _KLCaches,
                               notes: dict) -> Iterator[Case]:
    # Sampled (n, k, m, v, R, C) with v avoiding the increasing pattern
    # of length k+1: when the repeated-label immanant is not identically
    # zero (decided at generic rational points), it should be positive on
    # verified k-positive matrices.
    cases = config.samples or 1000
    max_n = config.max_n or 4
    max_m = config.max_m or 4
    vacuous = 0
    if config.k is not None and config.k + 1 > max_n:
        raise ValueError(f"pinned k={config.k} needs max_n > k")
    for t in range(cases):
        key = f"t={t:05d}"
        rng = _case_rng(config.seed, "search-5.3", key)
        if config.k is not None:
            k = config.k
            n = rng.randint(k + 1, max_n)
        else:
            n = rng.randint(2, max_n)
            k = rng.randint(1, n - 1)
        m = rng.randint(n, max(n, max_m))
        pool = _avoiders(n, (_increasing_pattern(k + 1),))
        v = pool[rng.randrange(len(pool))]
        R = _random_multiset(m, n, rng)
        C = _random_multiset(m, n, rng)
        cache = caches.for_n(n)
        generic_nonzero = any(
            imm_definition(
                v, repeat_submatrix(_random_rational_matrix(m, rng), R, C),
                cache) != 0
            for _ in range(3))
        if not generic_nonzero:
            vacuous += 1
            yield key, True, None
            continue
        M = _k_positive_samples(m, k, f"{config.seed}:5.3:{t}", 1)[0]
        value = imm_definition(v, repeat_submatrix(M, R, C), cache)
        passed = value > 0
        yield key, passed, None if passed else {
            "v": format_perm(v), "n": n, "k": k, "m": m,
            "R": list(R), "C": list(C), "matrix": M.to_doc(),
            "value": str(value)}
    notes["identically_zero_cases"] = vacuous


SEARCHES: dict[str, Callable[[Config, _KLCaches, dict], Iterator[Case]]] = {
    "5.1": _search_plain_immanant,
    "5.2": _search_sign_control,
    "5.3": _search_pattern_positivity,
}

SEARCH_NOTES = {
    "5.1": {"hypothesis_source": "sampled verified k-positive matrices; "
                                 "v avoids the increasing (k+1)-pattern"},
    "5.2": {"hypothesis_source": "proven sufficient condition: v avoids "
                                 "1324 and 2143 with largest square <= k"},
    "5.3": {"hypothesis_source": "nonvanishing decided at 3 generic "
                                 "rational points (exact arithmetic)"},
}


def run_search(conjecture: str, config: Config) -> SuiteReport:
    """Randomized counterexample search for one conjecture."""
    if conjecture not in SEARCHES:
        raise ValueError(f"unknown conjecture {conjecture!r}; choose from "
                         f"{sorted(SEARCHES)}")
    caches = _KLCaches(config.kl_cache_path)
    notes = dict(SEARCH_NOTES[conjecture])
    start = time.perf_counter()
    results = sorted(SEARCHES[conjecture](config, caches, notes),
                     key=lambda case: case[0])
    elapsed = time.perf_counter() - start
    caches.persist()
    counterexamples = [
        {"case": key, **witness}
        for key, passed, witness in results if not passed and witness]
    if counterexamples:
        notes["conclusion"] = (f"{len(counterexamples)} candidate "
                               "counterexample(s) found; see witnesses")
    else:
        notes["conclusion"] = (f"no counterexample found in {len(results)} "
                               "trials (this is not a proof)")
    return SuiteReport(
        suite=f"search-{conjecture}",
        params={
            "max_n": config.max_n, "max_m": config.max_m,
            "samples": config.samples, "seed": config.seed,
            "k": config.k,
        },
        cases_run=len(results),
        cases_passed=sum(1 for _, passed, _ in results if passed),
        counterexamples=counterexamples,
        wall_time=elapsed,
        notes=notes,
    )
