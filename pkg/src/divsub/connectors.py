"""Efficient cliques, connectors built from them, and weight switching along connectors.

A connector is a chain of efficient t-cliques glued at single junction
vertices x_1, ..., x_{s+1}. Its base path runs straight through the
junctions. For t = 3 each clique adds a detour x_i y_i x_{i+1} whose extra
weight is the clique's efficiency value c_i, so the base weight can be
shifted by any element of the iterated sumset of {0, c_i}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

from .subdivision import SearchBudgetExceeded
from .weighted import Weighting, path_weight
from .zq import WeightSet, is_prime, iterated_sumset, subset_sum_selection

__all__ = [
    "EfficientClique",
    "Connector",
    "efficiency_value",
    "clique_paths",
    "is_efficient_clique",
    "build_connector",
    "switch_path",
    "reachable_weights",
    "path_with_weight",
    "connector_to_json",
]


@dataclass(frozen=True)
class EfficientClique:
    vertices: tuple[int, ...]
    x: int
    x_prime: int
    path_weights: WeightSet
    # one witness path per realizable weight
    witnesses: tuple[tuple[int, tuple[int, ...]], ...]

    @property
    def t(self) -> int:
        return len(self.vertices)

    @property
    def inner(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if v not in (self.x, self.x_prime))

    def witness(self, weight: int) -> tuple[int, ...]:
        for w, p in self.witnesses:
            if w == weight:
                return p
        raise KeyError(weight)


@dataclass(frozen=True)
class Connector:
    cliques: tuple[EfficientClique, ...]
    q: int

    def __post_init__(self):
        for a, b in zip(self.cliques, self.cliques[1:]):
            if a.x_prime != b.x:
                raise ValueError("consecutive cliques must share their junction vertex")
            if set(a.vertices) & set(b.vertices) != {a.x_prime}:
                raise ValueError("consecutive cliques must meet in exactly one vertex")
        for i, j in combinations(range(len(self.cliques)), 2):
            if j - i >= 2 and set(self.cliques[i].vertices) & set(self.cliques[j].vertices):
                raise ValueError(f"cliques {i} and {j} are not disjoint")

    @property
    def s(self) -> int:
        return len(self.cliques)

    @property
    def t(self) -> int:
        return self.cliques[0].t

    @property
    def junctions(self) -> tuple[int, ...]:
        return (self.cliques[0].x,) + tuple(c.x_prime for c in self.cliques)

    @property
    def base_path(self) -> tuple[int, ...]:
        return self.junctions

    @property
    def endpoints(self) -> tuple[int, int]:
        j = self.junctions
        return j[0], j[-1]

    def vertex_set(self) -> set[int]:
        out: set[int] = set()
        for c in self.cliques:
            out.update(c.vertices)
        return out

    def efficiencies(self, W: Weighting) -> tuple[int, ...]:
        if self.t != 3:
            raise ValueError("efficiency values are defined for 3-connectors only")
        return tuple(efficiency_value(W, c.x, c.inner[0], c.x_prime) for c in self.cliques)

    def delta_set(self, W: Weighting) -> WeightSet:
        """Shifts of the base weight realizable by switching (3-connectors)."""
        q = self.q
        return iterated_sumset([WeightSet.of(q, (0, c)) for c in self.efficiencies(W)], q)


def efficiency_value(W: Weighting, x: int, y: int, x_prime: int) -> int:
    """c = w(xy) + w(yx') - w(xx') mod q; the triple is efficient iff c != 0."""
    if len({x, y, x_prime}) != 3:
        raise ValueError(f"need three distinct vertices, got {(x, y, x_prime)}")
    return (W(x, y) + W(y, x_prime) - W(x, x_prime)) % W.q


def clique_paths(vertices: Sequence[int], x: int, x_prime: int) -> list[tuple[int, ...]]:
    """Every x -> x' path using only ``vertices``."""
    inner = [v for v in vertices if v not in (x, x_prime)]
    out = []
    for k in range(len(inner) + 1):
        for mid in permutations(inner, k):
            out.append((x,) + mid + (x_prime,))
    return out


def is_efficient_clique(W: Weighting, vertices: Sequence[int], x: int, x_prime: int) -> Optional[EfficientClique]:
    vertices = tuple(vertices)
    t = len(vertices)
    if t < 3 or len(set(vertices)) != t:
        raise ValueError(f"need at least 3 distinct vertices, got {vertices}")
    if x not in vertices or x_prime not in vertices or x == x_prime:
        raise ValueError("x and x' must be distinct members of the clique")
    witnesses: dict[int, tuple[int, ...]] = {}
    for p in clique_paths(vertices, x, x_prime):
        witnesses.setdefault(path_weight(W, p), p)
    if len(witnesses) < t - 1:
        return None
    return EfficientClique(
        vertices, x, x_prime, WeightSet(W.q, frozenset(witnesses)), tuple(sorted(witnesses.items()))
    )


def build_connector(
    W: Weighting, t: int, s: int, forbidden: Iterable[int] = (), budget: int = 10**6
) -> Optional[Connector]:
    """Chain s efficient t-cliques on vertices outside ``forbidden``.

    Lowest-indexed vertices are tried first. Returns None when no such chain
    exists; raises SearchBudgetExceeded when the search gives up.
    """
    if t not in (3, 4):
        raise ValueError(f"only t in (3, 4) is supported, got {t}")
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    banned = set(forbidden)
    pool = [v for v in range(W.f) if v not in banned]
    if len(pool) < (t - 1) * s + 1:
        return None
    nodes = 0
    chain: list[EfficientClique] = []

    def grow(x: int, used: set[int]) -> bool:
        nonlocal nodes
        if len(chain) == s:
            return True
        free = [v for v in pool if v not in used]
        if len(free) < (t - 1) * (s - len(chain)):
            return False
        for group in combinations(free, t - 1):
            for nxt in group:
                nodes += 1
                if nodes > budget:
                    raise SearchBudgetExceeded(budget)
                clique = is_efficient_clique(W, (x,) + group, x, nxt)
                if clique is None:
                    continue
                chain.append(clique)
                if grow(nxt, used | set(group)):
                    return True
                chain.pop()
        return False

    for x1 in pool:
        if grow(x1, {x1}):
            return Connector(tuple(chain), W.q)
    return None


def switch_path(X: Connector, W: Weighting, delta: int) -> tuple[int, ...]:
    """A junction-to-junction path through X weighing base + delta.

    Detours x_i y_i x_{i+1} are taken exactly at the indices chosen by
    :func:`subset_sum_selection` over the efficiency values.
    """
    if X.t != 3:
        raise ValueError("switching is defined for 3-connectors")
    cs = X.efficiencies(W)
    picked = subset_sum_selection(cs, delta, W.q)
    if picked is None:
        raise ValueError(f"shift {delta % W.q} is not realizable by this connector")
    chosen = set(picked)
    path = []
    for i, c in enumerate(X.cliques):
        path.append(c.x)
        if i in chosen:
            path.append(c.inner[0])
    path.append(X.cliques[-1].x_prime)
    return tuple(path)


def reachable_weights(X: Connector, W: Weighting) -> WeightSet:
    """Exact set of endpoint-to-endpoint path weights realizable clique by clique.

    Over a prime modulus the result is checked against the guaranteed size
    min(2s+1, p) for 4-connectors.
    """
    R = iterated_sumset([c.path_weights for c in X.cliques], X.q)
    if X.t == 4 and is_prime(X.q) and len(R) < min(2 * X.s + 1, X.q):
        raise AssertionError(
            f"theorem violation: 4-connector with s={X.s} reaches only {len(R)} weights mod {X.q}"
        )
    return R


def path_with_weight(X: Connector, W: Weighting, target: int) -> tuple[int, ...]:
    """Concatenate one witness path per clique so that the total weighs ``target``."""
    q = X.q
    target %= q
    # suffix reachability, then greedy forward choice
    suffix = [WeightSet(q, frozenset({0}))]
    for c in reversed(X.cliques):
        suffix.append(suffix[-1] + c.path_weights)
    suffix.reverse()
    if target not in suffix[0]:
        raise ValueError(f"weight {target} is not realizable by this connector")
    path: list[int] = [X.cliques[0].x]
    acc = 0
    for i, c in enumerate(X.cliques):
        for w in sorted(c.path_weights):
            if (target - acc - w) % q in suffix[i + 1]:
                path.extend(c.witness(w)[1:])
                acc = (acc + w) % q
                break
    return tuple(path)


def connector_to_json(X: Connector, W: Optional[Weighting] = None) -> dict:
    doc = {
        "t": X.t,
        "q": X.q,
        "junctions": list(X.junctions),
        "cliques": [{"vertices": list(c.vertices), "x": c.x, "x_prime": c.x_prime} for c in X.cliques],
    }
    if W is not None and X.t == 3:
        doc["efficiencies"] = list(X.efficiencies(W))
    return doc
