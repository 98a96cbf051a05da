"""Detectors for the two structural claims used against a hypothetical minimal
counterexample in the 1-subdivided tree argument over Z_2.

* the alternating 4-cycle x1x2x3x4 with weights 1, 0, 1, 0;
* a vertex ordering in which w(x_i x_j), i < j, is 0 for odd j and 1 for even j
  (positions are 1-based).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

from .weighted import Weighting

__all__ = [
    "FourConfig",
    "find_four_config",
    "find_parity_ordering",
    "is_parity_ordering",
    "parity_weighting",
]

FOUR_PATTERN = (1, 0, 1, 0)


@dataclass(frozen=True)
class FourConfig:
    vertices: tuple[int, int, int, int]

    def cycle_edges(self) -> list[tuple[int, int]]:
        x = self.vertices
        return [(x[0], x[1]), (x[1], x[2]), (x[2], x[3]), (x[3], x[0])]


def _require_z2(W: Weighting) -> None:
    if W.q != 2:
        raise ValueError(f"defined for Z_2 weightings only, got q={W.q}")


def find_four_config(W: Weighting) -> Optional[FourConfig]:
    _require_z2(W)
    m = W.matrix
    for x1, x2, x3, x4 in permutations(range(W.f), 4):
        if m[x1][x2] == 1 and m[x2][x3] == 0 and m[x3][x4] == 1 and m[x4][x1] == 0:
            return FourConfig((x1, x2, x3, x4))
    return None


def _required(position: int) -> int:
    # 1-based position of the later endpoint decides the weight
    return 1 if position % 2 == 0 else 0


def is_parity_ordering(W: Weighting, order: Sequence[int]) -> bool:
    _require_z2(W)
    if sorted(order) != list(range(W.f)):
        return False
    m = W.matrix
    for j in range(1, len(order)):
        need = _required(j + 1)
        if any(m[order[i]][order[j]] != need for i in range(j)):
            return False
    return True


def find_parity_ordering(W: Weighting) -> Optional[tuple[int, ...]]:
    """Backtracking search for an ordering whose weights follow the later endpoint's parity."""
    _require_z2(W)
    f = W.f
    m = W.matrix
    order: list[int] = []
    used = [False] * f

    def place() -> bool:
        if len(order) == f:
            return True
        need = _required(len(order) + 1)
        for y in range(f):
            if used[y] or any(m[x][y] != need for x in order):
                continue
            used[y] = True
            order.append(y)
            if place():
                return True
            order.pop()
            used[y] = False
        return False

    return tuple(order) if place() else None


def parity_weighting(order: Sequence[int]) -> Weighting:
    """The Z_2 weighting for which ``order`` is a parity ordering."""
    pos = {v: i + 1 for i, v in enumerate(order)}
    return Weighting.from_function(len(order), 2, lambda u, v: _required(max(pos[u], pos[v])))
