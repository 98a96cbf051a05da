"""B-restricted weightings and zero-weight routing through B-connectors.

A weighting is B-restricted (B = d Z_q) when 2w(e) lies in B for every edge
and every efficiency value w(xy) + w(yx') - w(xx') lies in B. Deleting any
vertex v from an arbitrary weighting leaves a graph that is restricted for
the subgroup generated by the efficiency values of triples starting at v.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Optional

import numpy as np

from .connectors import Connector, EfficientClique, is_efficient_clique, switch_path
from .subdivision import SearchBudgetExceeded, Verdict
from .weighted import Weighting, cycle_weight, path_weight
from .zq import Subgroup, WeightSet, generated_subgroup

__all__ = [
    "RestrictionCertificate",
    "PreconditionError",
    "is_b_restricted",
    "local_subgroup",
    "generate_b_restricted",
    "check_cycle_weights",
    "find_b_connector",
    "zero_weight_path",
]

CYCLE_CAP = 7


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class RestrictionCertificate:
    d: int
    mode: str  # "verified" or "derived-from-vertex"
    vertex: Optional[int] = None


def _check_divisor(W: Weighting, d: int) -> None:
    if d < 1 or W.q % d != 0:
        raise ValueError(f"{d} does not divide {W.q}")


def is_b_restricted(W: Weighting, d: int) -> Verdict:
    _check_divisor(W, d)
    m = W.matrix
    for u, v, w in W.edges():
        if (2 * w) % d:
            return Verdict(False, f"edge ({u},{v}): 2*{w} not in {d}Z_{W.q}")
    for x, y, z in permutations(range(W.f), 3):
        c = (m[x][y] + m[y][z] - m[x][z]) % W.q
        if c % d:
            return Verdict(False, f"triple ({x},{y},{z}) is {c}-efficient, {c} not in {d}Z_{W.q}")
    return Verdict(True)


def local_subgroup(W: Weighting, v: int) -> Subgroup:
    """Subgroup generated by the efficiency values of all triples (v, x, y)."""
    if W.f < 3:
        raise ValueError(f"need at least 3 vertices, got {W.f}")
    m, q = W.matrix, W.q
    others = [x for x in range(W.f) if x != v]
    cs = {(m[v][x] + m[x][y] - m[v][y]) % q for x, y in permutations(others, 2)}
    cs.discard(0)
    return generated_subgroup(sorted(cs), q)


def generate_b_restricted(f: int, q: int, seed, divisor: Optional[int] = None) -> tuple[Weighting, int]:
    """Random restricted weighting on K_f: draw K_{f+1}, strip vertex 0.

    With ``divisor`` set, the apex and edge weights are drawn so that every
    efficiency value at the apex is a multiple of it, which makes the
    returned subgroup nontrivial. The returned divisor is always recomputed
    from the apex.
    """
    rng = np.random.default_rng(seed)
    g = f + 1
    if divisor is None:
        big = Weighting(g, q, tuple(rng.integers(0, q, size=g * (g - 1) // 2).tolist()))
    else:
        d = divisor
        if q % d:
            raise ValueError(f"{d} does not divide {q}")
        # apex weights pairwise differing by multiples of d/gcd(d,2) keep 2(a_x - a_y) in dZ
        step = d // 2 if d % 2 == 0 else d
        base = int(rng.integers(0, q))
        apex = [0] + [(base + step * int(rng.integers(0, q))) % q for _ in range(f)]
        big = Weighting.from_function(
            g,
            q,
            lambda u, v: apex[v] if u == 0 else apex[v] - apex[u] + d * int(rng.integers(0, q)),
        )
    sub = local_subgroup(big, 0)
    return big.remove_vertex(0), sub.d


def _cycles(f: int, max_len: int):
    """Each undirected cycle once: smallest vertex first, second < last."""
    for k in range(3, max_len + 1):
        for first in range(f):
            rest = range(first + 1, f)
            for tail in permutations(rest, k - 1):
                if tail[0] < tail[-1]:
                    yield (first,) + tail


def check_cycle_weights(W: Weighting, d: int, cap: int = CYCLE_CAP) -> Verdict:
    verdict = is_b_restricted(W, d)
    if not verdict:
        raise PreconditionError(f"weighting is not {d}-restricted: {verdict.reason}")
    for c in _cycles(W.f, min(W.f, cap)):
        w = cycle_weight(W, c)
        if w % d:
            return Verdict(False, f"cycle {c} weighs {w}, not in {d}Z_{W.q}")
    return Verdict(True)


def find_b_connector(
    W: Weighting, d: int, forbidden: Iterable[int] = (), max_s: Optional[int] = None, budget: int = 10**6
) -> Optional[Connector]:
    """Shortest-first search for a 3-connector whose switch shifts cover d Z_q."""
    _check_divisor(W, d)
    q = W.q
    target = Subgroup(q, d).members
    banned = set(forbidden)
    pool = [v for v in range(W.f) if v not in banned]
    if target == {0}:
        # any single efficient triple works; the shift set always contains 0
        max_s = 1
    if max_s is None:
        max_s = (len(pool) - 1) // 2
    nodes = 0

    def grow(chain: list[EfficientClique], x: int, used: set[int], shifts: frozenset, s: int) -> Optional[list]:
        nonlocal nodes
        if len(chain) == s:
            return list(chain) if target <= shifts else None
        free = [v for v in pool if v not in used]
        if len(free) < 2 * (s - len(chain)):
            return None
        for a, b in combinations(free, 2):
            for nxt, mid in ((a, b), (b, a)):
                nodes += 1
                if nodes > budget:
                    raise SearchBudgetExceeded(budget)
                c = (W(x, mid) + W(mid, nxt) - W(x, nxt)) % q
                if c == 0 or c % d:
                    continue
                clique = is_efficient_clique(W, (x, mid, nxt), x, nxt)
                chain.append(clique)
                grown = frozenset((r + e) % q for r in shifts for e in (0, c))
                found = grow(chain, nxt, used | {a, b}, grown, s)
                if found:
                    return found
                chain.pop()
        return None

    for s in range(1, max_s + 1):
        for x1 in pool:
            found = grow([], x1, {x1}, frozenset({0}), s)
            if found:
                return Connector(tuple(found), q)
    return None


def zero_weight_path(W: Weighting, F: Connector, u: int, v: int, d: int) -> tuple[int, ...]:
    """A u-v path of weight 0 whose internal vertices all lie in F.

    Routes u -> base path -> v, measures its weight b (which lies in d Z_q),
    then switches along F by -b.
    """
    _check_divisor(W, d)
    verdict = is_b_restricted(W, d)
    if not verdict:
        raise PreconditionError(f"weighting is not {d}-restricted: {verdict.reason}")
    if F.t != 3:
        raise PreconditionError("F must be a 3-connector")
    if not F.delta_set(W).contains_subgroup(Subgroup(W.q, d)):
        raise PreconditionError(f"F is not a B-connector: its shifts do not cover {d}Z_{W.q}")
    inside = F.vertex_set()
    if u in inside or v in inside or u == v:
        raise PreconditionError("u and v must be distinct vertices outside F")
    if W(u, v) % d:
        raise PreconditionError(f"edge weight w(uv) = {W(u, v)} is not in {d}Z_{W.q}")
    b = path_weight(W, (u,) + F.base_path + (v,))
    if b % d:
        raise AssertionError(f"theorem violation: uPv weighs {b}, outside {d}Z_{W.q}")
    Q = switch_path(F, W, -b)
    out = (u,) + Q + (v,)
    if path_weight(W, out) != 0:
        raise AssertionError(f"theorem violation: switched path {out} is not zero-weight")
    return out
