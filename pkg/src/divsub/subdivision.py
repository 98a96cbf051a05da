"""Subdivision certificates, their verifier, and complete backtracking finders.

A certificate is a branch map plus one host path per pattern edge. The
verifier is the only place that decides q-divisibility; the finders merely
propose embeddings and every returned embedding passes it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .pattern import PatternGraph
from .weighted import Weighting

__all__ = [
    "SubdivisionEmbedding",
    "Verdict",
    "SearchBudgetExceeded",
    "DEFAULT_BUDGET",
    "verify_embedding",
    "find_subdivision",
    "find_t_subdivision",
    "embedding_to_json",
    "embedding_from_json",
]

DEFAULT_BUDGET = 10**6


class SearchBudgetExceeded(RuntimeError):
    """The finder gave up; this is not a proof of absence."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} nodes exhausted")
        self.nodes = nodes


@dataclass(frozen=True)
class SubdivisionEmbedding:
    branch_map: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "branch_map", tuple(int(x) for x in self.branch_map))
        object.__setattr__(self, "paths", tuple(tuple(int(x) for x in p) for p in self.paths))

    def vertices(self) -> set[int]:
        out = set(self.branch_map)
        for p in self.paths:
            out.update(p)
        return out


@dataclass(frozen=True)
class Verdict:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_embedding(
    W: Weighting, H: PatternGraph, E: SubdivisionEmbedding, t: Optional[int] = None
) -> Verdict:
    """Check every clause of a (t-)subdivision certificate, reporting the first failure.

    Raises ValueError for dangling references (wrong arity, vertices outside
    the host).
    """
    if len(E.branch_map) != H.n:
        raise ValueError(f"branch map has {len(E.branch_map)} entries for {H.n} pattern vertices")
    if len(E.paths) != H.m:
        raise ValueError(f"{len(E.paths)} paths given for {H.m} pattern edges")
    for x in E.vertices():
        if not 0 <= x < W.f:
            raise ValueError(f"host vertex {x} outside [0, {W.f})")

    if len(set(E.branch_map)) != H.n:
        return Verdict(False, "branch map is not injective")
    branch = set(E.branch_map)
    m, q = W.matrix, W.q
    seen_internal: dict[int, int] = {}
    for k, ((a, b), path) in enumerate(zip(H.edges, E.paths)):
        if len(path) < 2:
            return Verdict(False, f"path for edge ({a},{b}) has length 0")
        ends = {path[0], path[-1]}
        if ends != {E.branch_map[a], E.branch_map[b]}:
            return Verdict(False, f"path for edge ({a},{b}) has wrong endpoints {path[0]},{path[-1]}")
        if len(set(path)) != len(path):
            return Verdict(False, f"path for edge ({a},{b}) repeats a vertex")
        for x in path[1:-1]:
            if x in branch:
                return Verdict(False, f"internal disjointness: path for edge ({a},{b}) passes branch vertex {x}")
            if x in seen_internal:
                return Verdict(
                    False,
                    f"internal disjointness: vertex {x} is internal to paths {seen_internal[x]} and {k}",
                )
            seen_internal[x] = k
        if t is not None and len(path) != t + 2:
            return Verdict(False, f"path for edge ({a},{b}) has length {len(path) - 1}, expected {t + 1}")
        w = sum(m[x][y] for x, y in zip(path, path[1:])) % q
        if w != 0:
            return Verdict(False, f"path weight ≠ 0 mod q: edge ({a},{b}) path weighs {w} mod {q}")
    return Verdict(True)


def _step_reach(W: Weighting) -> list[int]:
    """Bit r of entry L is set when r is a sum of L weights that occur in W.

    Every path of length L weighs a residue flagged at entry L, so these sets
    give sound pruning bounds.
    """
    present = 0
    for w in set(W.weights):
        present |= 1 << w
    return _reach_table(present, W.q, W.f)


@lru_cache(maxsize=4096)
def _reach_table(present: int, q: int, steps: int) -> list[int]:
    full = (1 << q) - 1
    reach = [1]  # length 0 reaches {0}
    for _ in range(steps):
        prev, cur = reach[-1], 0
        for r in range(q):
            if prev >> r & 1:
                cur |= ((present << r) | (present >> (q - r))) & full
        reach.append(cur)
    return tuple(reach)


@lru_cache(maxsize=4096)
def _min_steps(reach: tuple, q: int) -> list[int]:
    """For each residue r, the least L >= 1 with r reachable in exactly L steps (inf if none)."""
    inf = 1 << 30
    best = [inf] * q
    for L in range(1, len(reach)):
        for r in range(q):
            if best[r] == inf and reach[L] >> r & 1:
                best[r] = L
    return best


def _pattern_orders(H: PatternGraph) -> tuple[list[int], list[int]]:
    deg = H.degrees()
    vorder = sorted(range(H.n), key=lambda v: (-deg[v], v))
    eorder = sorted(range(H.m), key=lambda k: (-(deg[H.edges[k][0]] + deg[H.edges[k][1]]), k))
    return vorder, eorder


def _search(W: Weighting, H: PatternGraph, t: Optional[int], budget: int) -> Optional[SubdivisionEmbedding]:
    f, q = W.f, W.q
    n, mH = H.n, H.m
    if n > f:
        return None
    if t is not None and n + t * mH > f:
        return None
    rows = W.matrix
    reach = _step_reach(W)
    min_steps = _min_steps(reach, q)
    need_zero = min_steps[0]
    if mH and need_zero >= 1 << 30:
        return None
    if t is None and mH * (need_zero - 1) + n > f:
        return None
    if t is not None and mH and not reach[t + 1] & 1:
        return None

    vorder, eorder = _pattern_orders(H)
    edges = [H.edges[k] for k in eorder]
    per_path_internal = t if t is not None else need_zero - 1
    nodes = 0
    image = [0] * n
    chosen: list[Optional[tuple[int, ...]]] = [None] * mH

    def route(ei: int, used: int, memo: set) -> bool:
        """Route edges[ei:] given occupied vertex mask ``used``."""
        if ei == mH:
            return True
        a, b = edges[ei]
        src, dst = image[a], image[b]
        later = mH - ei - 1
        free_total = f - bin(used).count("1")
        if free_total < later * per_path_internal:
            return False
        path = [src]

        def extend(x: int, w: int, used: int, length: int) -> bool:
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget)
            key = (ei, x, w, used, length if t is not None else 0)
            if key in memo:
                return False
            row = rows[x]
            # close onto the target
            wc = (w + row[dst]) % q
            if wc == 0 and (t is None or length + 1 == t + 1):
                path.append(dst)
                chosen[ei] = tuple(path)
                if route(ei + 1, used, memo):
                    return True
                path.pop()
            # extend through a free vertex
            free = f - bin(used).count("1")
            reserve = later * per_path_internal
            if t is not None:
                if length + 1 >= t + 1:
                    memo.add(key)
                    return False
                remaining_after = t + 1 - (length + 1)
            inner_left = t - length - 1 if t is not None else 0
            if free - 1 - inner_left >= reserve:
                for y in range(f):
                    if used >> y & 1:
                        continue
                    w2 = (w + row[y]) % q
                    need = (-w2) % q
                    if t is None:
                        steps = min_steps[need]
                        if steps >= 1 << 30 or free - 1 - (steps - 1) < reserve:
                            continue
                    elif not reach[remaining_after] >> need & 1:
                        continue
                    path.append(y)
                    if extend(y, w2, used | (1 << y), length + 1):
                        return True
                    path.pop()
            memo.add(key)
            return False

        return extend(src, 0, used, 0)

    def assign(i: int, used: int) -> bool:
        if i == n:
            return route(0, used, set())
        v = vorder[i]
        for x in range(f):
            if used >> x & 1:
                continue
            image[v] = x
            if assign(i + 1, used | (1 << x)):
                return True
        return False

    if assign(0, 0):
        return SubdivisionEmbedding(tuple(image), tuple(chosen[eorder.index(k)] for k in range(mH)))
    return None


def find_subdivision(
    W: Weighting, H: PatternGraph, budget: int = DEFAULT_BUDGET
) -> Optional[SubdivisionEmbedding]:
    """A q-divisible subdivision of H in W, or None when none exists.

    Raises SearchBudgetExceeded when more than ``budget`` search nodes were
    needed.
    """
    return _search(W, H, None, budget)


def find_t_subdivision(
    W: Weighting, H: PatternGraph, t: int, budget: int = DEFAULT_BUDGET
) -> Optional[SubdivisionEmbedding]:
    """A q-divisible subdivision with exactly ``t`` internal vertices per path, or None."""
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    return _search(W, H, t, budget)


def embedding_to_json(W: Weighting, H: PatternGraph, E: SubdivisionEmbedding, t: Optional[int] = None) -> dict:
    return {
        "f": W.f,
        "q": W.q,
        "t": t,
        "branch_map": list(E.branch_map),
        "paths": [{"edge": [u, v], "vertices": list(p)} for (u, v), p in zip(H.edges, E.paths)],
    }


def embedding_from_json(doc, H: PatternGraph) -> tuple[SubdivisionEmbedding, Optional[int]]:
    """Parse a certificate dict (or JSON text); paths are matched to H's edges by their ``edge`` key."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    by_edge = {}
    for entry in doc["paths"]:
        u, v = entry["edge"]
        by_edge[(min(u, v), max(u, v))] = tuple(entry["vertices"])
    missing = [e for e in H.edges if e not in by_edge]
    if missing:
        raise ValueError(f"certificate lacks paths for pattern edges {missing}")
    if len(by_edge) != H.m:
        raise ValueError("certificate has paths for edges not in the pattern")
    E = SubdivisionEmbedding(tuple(doc["branch_map"]), tuple(by_edge[e] for e in H.edges))
    return E, doc.get("t")
