"""Unpruned brute force over branch maps and path systems.

Deliberately shares no search code with :mod:`divsub.subdivision`: it lists
every simple path explicitly and tries every combination. Only usable on tiny
hosts; it exists to cross-check the pruned finders.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Iterator, Optional

from .pattern import PatternGraph
from .subdivision import SubdivisionEmbedding
from .weighted import Weighting, path_weight

__all__ = ["simple_paths", "naive_find"]


def simple_paths(f: int, src: int, dst: int, forbidden: frozenset) -> Iterator[tuple[int, ...]]:
    """All simple src-dst paths in K_f whose internal vertices avoid ``forbidden``."""
    def grow(path):
        yield path + (dst,)
        for y in range(f):
            if y != dst and y not in forbidden and y not in path:
                yield from grow(path + (y,))

    if src != dst:
        yield from grow((src,))


def naive_find(W: Weighting, H: PatternGraph, t: Optional[int] = None) -> Optional[SubdivisionEmbedding]:
    for bmap in permutations(range(W.f), H.n):
        branch = frozenset(bmap)
        options = []
        for a, b in H.edges:
            ok = [
                p
                for p in simple_paths(W.f, bmap[a], bmap[b], branch)
                if path_weight(W, p) == 0 and (t is None or len(p) == t + 2)
            ]
            options.append(ok)
        for combo in product(*options):
            internals = [x for p in combo for x in p[1:-1]]
            if len(internals) == len(set(internals)):
                return SubdivisionEmbedding(bmap, combo)
    return None
