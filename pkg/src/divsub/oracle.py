"""Exact and sampled values of the divisible-subdivision numbers s_q(H), s_q(H, t).

``compute_sq`` walks f upward and enumerates every weighting of K_f. Because
a weighting of K_{f+1} restricts to one of K_f, the first level where every
weighting contains the target is the minimum, provided the level below has a
weighting that does not.
"""

from __future__ import annotations

import hashlib
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import ceil
from typing import Optional

import numpy as np

from . import __version__
from .naive import naive_find
from .pattern import PatternGraph, serialize_pattern
from .subdivision import DEFAULT_BUDGET, SearchBudgetExceeded, SubdivisionEmbedding, find_subdivision, find_t_subdivision
from .weighted import (
    Weighting,
    all_ones,
    default_guard,
    edge_count,
    iter_weight_tuples,
    random_weighting,
    serialize_weighting,
    weighting_from_index,
    weighting_index,
)
from .zq import is_prime

__all__ = [
    "bound_lower",
    "bound_tree",
    "bound_general",
    "bound_prime",
    "Outcome",
    "contains",
    "LevelStats",
    "SqResult",
    "compute_sq",
    "SampleResult",
    "sample_at",
    "audit_result",
    "result_to_json",
    "shard_ranges",
]


def bound_lower(n: int, m: int, q: int) -> int:
    return m * (q - 1) + n


def bound_tree(n: int, q: int) -> int:
    return n * q - q + 1


def bound_general(n: int, m: int, q: int) -> int:
    return (2 * q - 1) * m + 2 * n - 1 + 4 * q


def bound_prime(n: int, m: int, p: int) -> int:
    if p < 3 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return ceil(Fraction(3 * p - 1, 2) * m - Fraction(p - 1, 2) * n + Fraction(p + 1, 2))


@dataclass(frozen=True)
class Outcome:
    status: str  # "yes", "no" or "budget"
    embedding: Optional[SubdivisionEmbedding] = None

    @property
    def found(self) -> bool:
        return self.status == "yes"


def contains(W: Weighting, H: PatternGraph, t: Optional[int] = None, budget: int = DEFAULT_BUDGET) -> Outcome:
    try:
        E = find_subdivision(W, H, budget) if t is None else find_t_subdivision(W, H, t, budget)
    except SearchBudgetExceeded:
        return Outcome("budget")
    return Outcome("yes", E) if E is not None else Outcome("no")


def shard_ranges(total: int, shards: int) -> list[tuple[int, int]]:
    """Split [0, total) into ``shards`` contiguous near-equal ranges."""
    shards = max(1, min(shards, total)) if total else 1
    bounds = [total * k // shards for k in range(shards + 1)]
    return list(zip(bounds, bounds[1:]))


@dataclass
class _ShardResult:
    examined: int = 0
    failures: int = 0
    budget_hits: int = 0
    first_failure: Optional[int] = None
    first_budget: Optional[int] = None

    def merge(self, other: "_ShardResult") -> "_ShardResult":
        def lo(a, b):
            return b if a is None else a if b is None else min(a, b)

        return _ShardResult(
            self.examined + other.examined,
            self.failures + other.failures,
            self.budget_hits + other.budget_hits,
            lo(self.first_failure, other.first_failure),
            lo(self.first_budget, other.first_budget),
        )


def _scan(job) -> _ShardResult:
    n, edges, q, t, f, start, end, budget, stop_at_failure = job
    H = PatternGraph(n, edges)
    out = _ShardResult()
    finder = find_subdivision if t is None else (lambda W, H, b: find_t_subdivision(W, H, t, b))
    for idx, ws in enumerate(iter_weight_tuples(f, q, start, end), start):
        out.examined += 1
        try:
            found = finder(Weighting._trusted(f, q, ws), H, budget) is not None
        except SearchBudgetExceeded:
            out.budget_hits += 1
            if out.first_budget is None:
                out.first_budget = idx
            continue
        if not found:
            out.failures += 1
            if out.first_failure is None:
                out.first_failure = idx
                if stop_at_failure:
                    break
    return out


def _scan_level(H, q, t, f, budget, shards, stop_at_failure, lo=0, hi=None) -> _ShardResult:
    total = q ** edge_count(f)
    hi = total if hi is None else hi
    ranges = [(lo + a, lo + b) for a, b in shard_ranges(hi - lo, shards)]
    jobs = [(H.n, H.edges, q, t, f, a, b, budget, stop_at_failure) for a, b in ranges]
    if len(jobs) == 1:
        parts = [_scan(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            parts = list(pool.map(_scan, jobs))
    merged = _ShardResult()
    for p in parts:
        merged = merged.merge(p)
    return merged


@dataclass
class LevelStats:
    f: int
    total: int
    examined: int
    failures: int
    budget_hits: int
    first_failure: Optional[int]
    seconds: float


@dataclass
class SqResult:
    kind: str  # "exact", "lower-bound-only" or "inconclusive"
    value: int
    q: int
    t: Optional[int]
    witness_f: Optional[int] = None
    witness_index: Optional[int] = None
    levels: list[LevelStats] = field(default_factory=list)
    shards: int = 1
    seconds: float = 0.0
    note: str = ""

    @property
    def witness(self) -> Optional[Weighting]:
        if self.witness_f is None or self.witness_f < 1:
            return None
        return weighting_from_index(self.witness_f, self.q, self.witness_index)

    @property
    def examined(self) -> int:
        return sum(lv.examined for lv in self.levels)


def _natural_start(H: PatternGraph, q: int, t: Optional[int]) -> int:
    start = bound_lower(H.n, H.m, q)
    if t is not None:
        start = max(start, H.n + t * H.m)
    return max(start, 1)


def compute_sq(
    H: PatternGraph,
    q: int,
    t: Optional[int] = None,
    f_min: Optional[int] = None,
    f_max: Optional[int] = None,
    guard: Optional[int] = None,
    shards: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> SqResult:
    """Smallest f such that every Z_q-weighting of K_f contains the target.

    Levels are scanned upward from ``f_min`` (default: the vertex-count lower
    bound). A level is accepted only if no weighting fails and no search
    gives up. The level below must have a failing weighting, found either
    as the all-ones weighting or by enumeration.
    """
    if q < 2:
        raise ValueError(f"group order must be >= 2, got {q}")
    if t is not None and (t + 1) % q:
        raise ValueError(f"q={q} must divide t+1={t + 1}")
    guard = default_guard() if guard is None else guard
    t0 = time.perf_counter()
    f = _natural_start(H, q, t) if f_min is None else max(1, f_min)
    result = SqResult("inconclusive", f, q, t, shards=shards)

    # failing witness strictly below the first scanned level
    witness: Optional[tuple[int, int]] = None
    below = f - 1
    while below >= 1 and witness is None:
        ones = all_ones(below, q)
        if contains(ones, H, t, budget).status == "no":
            witness = (below, weighting_index(ones))
            break
        total = q ** edge_count(below)
        if total > guard:
            break
        lvl = _scan_level(H, q, t, below, budget, shards, stop_at_failure=True)
        if lvl.first_failure is not None:
            witness = (below, lvl.first_failure)
        else:
            # everything below passes as well; keep descending
            f = below
            below -= 1
    if below < 1 and witness is None:
        witness = (0, 0)

    while True:
        if f_max is not None and f > f_max:
            result.kind = "lower-bound-only"
            result.value = f
            result.note = f"every level up to f_max={f_max} has a failing weighting"
            break
        total = q ** edge_count(f)
        if total > guard:
            result.kind = "inconclusive"
            result.value = f
            result.note = f"{total} weightings of K_{f} exceed guard {guard}; s >= {f} only"
            break
        tl = time.perf_counter()
        lvl = _scan_level(H, q, t, f, budget, shards, stop_at_failure=False)
        result.levels.append(
            LevelStats(f, total, lvl.examined, lvl.failures, lvl.budget_hits, lvl.first_failure, time.perf_counter() - tl)
        )
        if lvl.failures:
            witness = (f, lvl.first_failure)
            f += 1
            continue
        if lvl.budget_hits:
            result.kind = "inconclusive"
            result.value = f
            result.note = f"search budget exhausted on {lvl.budget_hits} weightings of K_{f}"
            break
        if witness is None:
            result.kind = "inconclusive"
            result.value = f
            result.note = f"no failing weighting certified at f={f - 1}"
            break
        result.kind = "exact"
        result.value = f
        break

    if witness is not None:
        result.witness_f, result.witness_index = witness
        if witness[0] == 0:
            result.witness_f = None
            result.witness_index = None
    result.seconds = time.perf_counter() - t0
    return result


@dataclass
class SampleResult:
    f: int
    trials: int
    seed: int
    failures: int
    budget_hits: int
    failing_trials: list[int]

    @property
    def failure_count(self) -> int:
        return self.failures + self.budget_hits


def sample_at(
    H: PatternGraph,
    q: int,
    f: int,
    trials: int,
    seed: int,
    t: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
) -> SampleResult:
    """Run the finder on ``trials`` uniform weightings of K_f.

    Trial i uses ``numpy.random.default_rng([seed, i])`` so any failing
    trial can be regenerated on its own.
    """
    fails, hits, bad = 0, 0, []
    for i in range(trials):
        W = random_weighting(f, q, np.random.default_rng([seed, i]))
        out = contains(W, H, t, budget)
        if out.status == "no":
            fails += 1
            bad.append(i)
        elif out.status == "budget":
            hits += 1
            bad.append(i)
    return SampleResult(f, trials, seed, fails, hits, bad)


@dataclass
class AuditReport:
    witness_refuted: bool
    resampled: int
    resample_agreements: int

    @property
    def ok(self) -> bool:
        return self.witness_refuted and self.resampled == self.resample_agreements


def audit_result(result: SqResult, H: PatternGraph, samples: int = 100, seed: int = 0) -> AuditReport:
    """Re-check an exact result with the unpruned enumerator.

    The witness must contain no embedding, and ``samples`` random weightings
    at the accepted level must each contain one.
    """
    if result.kind != "exact":
        raise ValueError("only exact results can be audited")
    W = result.witness
    if W is None:
        # no host below f=1; nothing to refute
        refuted = result.value == 1
    else:
        refuted = naive_find(W, H, result.t) is None
    rng = np.random.default_rng(seed)
    total = result.q ** edge_count(result.value)
    agree = 0
    for _ in range(samples):
        idx = int(rng.integers(0, total))
        if naive_find(weighting_from_index(result.value, result.q, idx), H, result.t) is not None:
            agree += 1
    return AuditReport(refuted, samples, agree)


def pattern_hash(H: PatternGraph) -> str:
    return hashlib.sha256(serialize_pattern(H).encode()).hexdigest()


def result_to_json(result: SqResult, H: PatternGraph, manifest: Optional[dict] = None) -> dict:
    W = result.witness
    return {
        "pattern_sha256": pattern_hash(H),
        "pattern": serialize_pattern(H),
        "q": result.q,
        "t": result.t,
        "kind": result.kind,
        "value": result.value,
        "witness": None
        if W is None
        else {"f": result.witness_f, "index": result.witness_index, "weighting": serialize_weighting(W)},
        "stats": {
            "examined": result.examined,
            "shards": result.shards,
            "levels": [asdict(lv) for lv in result.levels],
            "seconds": result.seconds,
        },
        "note": result.note,
        "version": __version__,
        "manifest": manifest,
    }
