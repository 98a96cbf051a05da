"""Z_q-edge-weighted complete graphs K_f.

Edge (u, v) with u < v lives at position ``v*(v-1)//2 + u`` of the packed
weight tuple. The same packing defines the digit order used by
:func:`enumerate_weightings`, so weighting indices are stable across shards.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

import numpy as np

__all__ = [
    "Weighting",
    "edge_index",
    "edge_count",
    "edge_weight",
    "path_weight",
    "cycle_weight",
    "all_ones",
    "all_zeros",
    "star_witness",
    "random_weighting",
    "weighting_from_index",
    "weighting_index",
    "enumerate_weightings",
    "parse_weighting",
    "serialize_weighting",
    "default_guard",
    "GuardExceeded",
]

DEFAULT_GUARD = 1 << 24


class GuardExceeded(RuntimeError):
    """Requested enumeration is larger than the configured guard."""


def default_guard() -> int:
    env = os.environ.get("DIVSUB_GUARD")
    return int(env) if env else DEFAULT_GUARD


def edge_index(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


def edge_count(f: int) -> int:
    return f * (f - 1) // 2


@dataclass(frozen=True)
class Weighting:
    f: int
    q: int
    weights: tuple[int, ...]
    _matrix: Optional[tuple[tuple[int, ...], ...]] = field(
        default=None, init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if self.f < 1:
            raise ValueError(f"need at least one vertex, got f={self.f}")
        if self.q < 2:
            raise ValueError(f"group order must be >= 2, got {self.q}")
        if len(self.weights) != edge_count(self.f):
            raise ValueError(
                f"K_{self.f} has {edge_count(self.f)} edges, got {len(self.weights)} weights"
            )
        for w in self.weights:
            if not 0 <= w < self.q:
                raise ValueError(f"weight {w} outside [0, {self.q})")

    @classmethod
    def _trusted(cls, f: int, q: int, weights: tuple[int, ...]) -> "Weighting":
        # skips validation; only for tuples produced by the enumerator
        obj = object.__new__(cls)
        object.__setattr__(obj, "f", f)
        object.__setattr__(obj, "q", q)
        object.__setattr__(obj, "weights", weights)
        object.__setattr__(obj, "_matrix", None)
        return obj

    @classmethod
    def from_function(cls, f: int, q: int, fn: Callable[[int, int], int]) -> "Weighting":
        """Build from ``fn(u, v)`` called with u < v; values are reduced mod q."""
        weights = [0] * edge_count(f)
        for v in range(f):
            for u in range(v):
                weights[edge_index(u, v)] = fn(u, v) % q
        return cls(f, q, tuple(weights))

    @classmethod
    def from_edges(cls, f: int, q: int, assignment: dict, default: int = 0) -> "Weighting":
        """Weights from a ``{(u, v): w}`` dict; unlisted edges get ``default``."""
        weights = [default % q] * edge_count(f)
        for (u, v), w in assignment.items():
            if u == v:
                raise ValueError(f"loop at {u}")
            weights[edge_index(u, v)] = w % q
        return cls(f, q, tuple(weights))

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        """Dense symmetric lookup table; the diagonal holds 0 and is never read."""
        if self._matrix is None:
            f, w = self.f, self.weights
            rows = [[0] * f for _ in range(f)]
            k = 0
            for v in range(1, f):
                rv = rows[v]
                for u in range(v):
                    rows[u][v] = rv[u] = w[k]
                    k += 1
            object.__setattr__(self, "_matrix", tuple(tuple(r) for r in rows))
        return self._matrix

    def __call__(self, u: int, v: int) -> int:
        return edge_weight(self, u, v)

    def induced(self, vertices: Sequence[int]) -> "Weighting":
        """Sub-weighting on ``vertices``, relabelled 0..k-1 in the given order."""
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            raise ValueError("repeated vertex in induced subgraph")
        m = self.matrix
        return Weighting.from_function(len(vs), self.q, lambda a, b: m[vs[a]][vs[b]])

    def remove_vertex(self, v: int) -> "Weighting":
        return self.induced([x for x in range(self.f) if x != v])

    def edges(self) -> Iterator[tuple[int, int, int]]:
        for v in range(self.f):
            for u in range(v):
                yield u, v, self.weights[edge_index(u, v)]


def _check_vertex(W: Weighting, x: int) -> None:
    if not 0 <= x < W.f:
        raise ValueError(f"vertex {x} outside [0, {W.f})")


def edge_weight(W: Weighting, u: int, v: int) -> int:
    _check_vertex(W, u)
    _check_vertex(W, v)
    if u == v:
        raise ValueError(f"no loop edge at vertex {u}")
    return W.weights[edge_index(u, v)]


def path_weight(W: Weighting, path: Sequence[int]) -> int:
    if len(path) == 0:
        raise ValueError("a path has at least one vertex")
    if len(set(path)) != len(path):
        raise ValueError(f"repeated vertex in path {list(path)}")
    for x in path:
        _check_vertex(W, x)
    m = W.matrix
    return sum(m[a][b] for a, b in zip(path, path[1:])) % W.q


def cycle_weight(W: Weighting, cycle: Sequence[int]) -> int:
    if len(cycle) < 3:
        raise ValueError(f"a cycle needs at least 3 vertices, got {len(cycle)}")
    return (path_weight(W, cycle) + edge_weight(W, cycle[-1], cycle[0])) % W.q


def all_ones(f: int, q: int) -> Weighting:
    return Weighting(f, q, (1,) * edge_count(f))


def all_zeros(f: int, q: int) -> Weighting:
    return Weighting(f, q, (0,) * edge_count(f))


def star_witness(f: int, q: int, k: int) -> Weighting:
    """Weight 1 on every edge touching one of the vertices 0..k-1, 0 elsewhere."""
    if not 0 <= k <= f:
        raise ValueError(f"need 0 <= k <= f, got k={k}, f={f}")
    return Weighting.from_function(f, q, lambda u, v: 1 if u < k else 0)


def random_weighting(f: int, q: int, seed) -> Weighting:
    """Uniform weighting drawn from ``numpy.random.default_rng(seed)``.

    ``seed`` may be an int, a ``SeedSequence`` or a ``Generator``.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    return Weighting(f, q, tuple(rng.integers(0, q, size=edge_count(f)).tolist()))


def weighting_from_index(f: int, q: int, index: int) -> Weighting:
    e = edge_count(f)
    if not 0 <= index < q**e:
        raise ValueError(f"index {index} outside [0, {q}^{e})")
    digits = []
    for _ in range(e):
        index, r = divmod(index, q)
        digits.append(r)
    return Weighting(f, q, tuple(digits))


def weighting_index(W: Weighting) -> int:
    idx = 0
    for w in reversed(W.weights):
        idx = idx * W.q + w
    return idx


def enumerate_weightings(
    f: int, q: int, start: int = 0, end: Optional[int] = None, guard: Optional[int] = None
) -> Iterator[Weighting]:
    """Weightings with indices in ``[start, end)``; digit e of the index is edge e's weight."""
    total = q ** edge_count(f)
    end = total if end is None else end
    if not 0 <= start <= end <= total:
        raise ValueError(f"range [{start}, {end}) not inside [0, {total})")
    guard = default_guard() if guard is None else guard
    if end - start > guard:
        raise GuardExceeded(f"{end - start} weightings of K_{f} over Z_{q} exceed guard {guard}")
    return (Weighting._trusted(f, q, ws) for ws in iter_weight_tuples(f, q, start, end))


def iter_weight_tuples(f: int, q: int, start: int, end: int) -> Iterator[tuple[int, ...]]:
    """Raw packed weight tuples for indices in [start, end), odometer style."""
    e = edge_count(f)
    if start >= end:
        return
    digits = list(weighting_from_index(f, q, start).weights) if e else []
    for _ in range(end - start):
        yield tuple(digits)
        for i in range(e):
            digits[i] += 1
            if digits[i] < q:
                break
            digits[i] = 0


def serialize_weighting(W: Weighting) -> str:
    m = W.matrix
    lines = [f"{W.f} {W.q}"]
    for k in range(W.f - 1):
        lines.append(" ".join(str(m[k][j]) for j in range(k + 1, W.f)))
    return "\n".join(lines) + "\n"


def parse_weighting(text: str, reduce: bool = False) -> Weighting:
    lines = [ln for ln in text.strip().splitlines()]
    if not lines:
        raise ValueError("empty weighting file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"malformed header {lines[0]!r}; expected 'f q'")
    try:
        f, q = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"malformed header {lines[0]!r}; expected 'f q'") from None
    if f < 1 or q < 2:
        raise ValueError(f"malformed header {lines[0]!r}; need f >= 1 and q >= 2")
    rows = lines[1:]
    if len(rows) != f - 1:
        raise ValueError(f"expected {f - 1} weight rows, got {len(rows)}")
    weights = [0] * edge_count(f)
    for k, row in enumerate(rows):
        vals = row.split()
        if len(vals) != f - 1 - k:
            raise ValueError(f"row {k} has {len(vals)} weights, expected {f - 1 - k}")
        for j, tok in zip(range(k + 1, f), vals):
            w = int(tok)
            if reduce:
                w %= q
            elif not 0 <= w < q:
                raise ValueError(f"weight {w} on edge ({k},{j}) outside [0, {q})")
            weights[edge_index(k, j)] = w
    return Weighting(f, q, tuple(weights))
