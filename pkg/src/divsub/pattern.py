"""Pattern graphs H: parsing, connectivity, degeneracy, shape classification."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

__all__ = [
    "PatternGraph",
    "parse_pattern",
    "serialize_pattern",
    "degeneracy",
    "classify",
    "is_connected",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
]


@dataclass(frozen=True)
class PatternGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"negative vertex count {self.n}")
        seen = set()
        norm = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) references a vertex outside [0, {self.n})")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
            norm.append(key)
        object.__setattr__(self, "edges", tuple(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "PatternGraph":
        return cls(n, tuple(edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def path_graph(n: int) -> PatternGraph:
    """P_n: the path on n vertices."""
    return PatternGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> PatternGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return PatternGraph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def complete_graph(n: int) -> PatternGraph:
    return PatternGraph(n, tuple(combinations(range(n), 2)))


def star_graph(leaves: int) -> PatternGraph:
    return PatternGraph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def parse_pattern(text: str) -> PatternGraph:
    lines = [ln for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty pattern file")
    try:
        n, m = (int(x) for x in lines[0].split())
    except ValueError:
        raise ValueError(f"malformed header {lines[0]!r}; expected 'n m'") from None
    if len(lines) - 1 != m:
        raise ValueError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return PatternGraph(n, tuple(edges))


def serialize_pattern(H: PatternGraph) -> str:
    return "".join([f"{H.n} {H.m}\n"] + [f"{u} {v}\n" for u, v in H.edges])


def degeneracy(H: PatternGraph) -> int:
    """Largest degree seen when repeatedly deleting a minimum-degree vertex."""
    adj = H.adjacency()
    deg = [len(a) for a in adj]
    alive = set(range(H.n))
    best = 0
    while alive:
        v = min(alive, key=lambda x: (deg[x], x))
        best = max(best, deg[v])
        alive.remove(v)
        for w in adj[v]:
            if w in alive:
                deg[w] -= 1
    return best


def is_connected(H: PatternGraph) -> bool:
    if H.n == 0:
        return True
    adj = H.adjacency()
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == H.n


def classify(H: PatternGraph) -> str:
    """'tree', 'cycle' or 'other'."""
    if not is_connected(H):
        return "other"
    if H.m == H.n - 1:
        return "tree"
    if H.n >= 3 and all(d == 2 for d in H.degrees()):
        return "cycle"
    return "other"
