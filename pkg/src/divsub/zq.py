"""Arithmetic in the cyclic group Z_q.

Subgroups are stored by their canonical divisor ``d`` (the subgroup is
``d Z_q = {0, d, 2d, ...}``); weight sets carry their modulus so that mixing
groups is caught instead of silently coerced.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import gcd
from typing import Iterable, Optional, Sequence

__all__ = [
    "GroupContext",
    "Subgroup",
    "WeightSet",
    "normalize",
    "generated_subgroup",
    "sumset",
    "iterated_sumset",
    "cauchy_davenport_holds",
    "subset_sum_selection",
    "is_prime",
]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class GroupContext:
    q: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"group order must be >= 2, got {self.q}")


@dataclass(frozen=True)
class Subgroup:
    """The subgroup d*Z_q of Z_q. ``d == q`` is {0}, ``d == 1`` is all of Z_q."""

    q: int
    d: int

    def __post_init__(self):
        if self.q < 2:
            raise ValueError(f"group order must be >= 2, got {self.q}")
        if self.d < 1 or self.q % self.d != 0:
            raise ValueError(f"{self.d} does not divide {self.q}")

    def __contains__(self, x: int) -> bool:
        return x % self.d == 0

    @property
    def members(self) -> frozenset[int]:
        return frozenset(range(0, self.q, self.d))

    @property
    def order(self) -> int:
        return self.q // self.d

    def is_trivial(self) -> bool:
        return self.d == self.q


@dataclass(frozen=True)
class WeightSet:
    q: int
    members: frozenset[int]

    def __post_init__(self):
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        if self.q < 2:
            raise ValueError(f"group order must be >= 2, got {self.q}")
        bad = [x for x in members if not 0 <= x < self.q]
        if bad:
            raise ValueError(f"residues out of range [0, {self.q}): {sorted(bad)}")

    @classmethod
    def of(cls, q: int, values: Iterable[int]) -> "WeightSet":
        return cls(q, frozenset(v % q for v in values))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __add__(self, other: "WeightSet") -> "WeightSet":
        return sumset(self, other)

    def contains_subgroup(self, b: Subgroup) -> bool:
        if b.q != self.q:
            raise ValueError(f"mismatched moduli {self.q} and {b.q}")
        return b.members <= self.members


def normalize(x: int, q: int) -> int:
    if q < 2:
        raise ValueError(f"group order must be >= 2, got {q}")
    return x % q


def generated_subgroup(gens: Sequence[int], q: int) -> Subgroup:
    """Subgroup generated by ``gens``; the empty list gives the trivial subgroup."""
    return Subgroup(q, reduce(gcd, gens, q))


def sumset(a: WeightSet, b: WeightSet) -> WeightSet:
    if a.q != b.q:
        raise ValueError(f"mismatched moduli {a.q} and {b.q}")
    q = a.q
    return WeightSet(q, frozenset((x + y) % q for x, y in product(a.members, b.members)))


def iterated_sumset(sets: Sequence[WeightSet], q: int) -> WeightSet:
    """Sum of a sequence of sets; the empty sum is {0}."""
    acc = WeightSet(q, frozenset({0}))
    for s in sets:
        acc = sumset(acc, s)
    return acc


def cauchy_davenport_holds(a: WeightSet, b: WeightSet, p: int) -> bool:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a.q != p or b.q != p:
        raise ValueError(f"sets must live in Z_{p}")
    if not a.members or not b.members:
        raise ValueError("sets must be nonempty")
    return len(sumset(a, b)) >= min(p, len(a) + len(b) - 1)


def subset_sum_selection(values: Sequence[int], target: int, q: int) -> Optional[tuple[int, ...]]:
    """Indices I with sum(values[I]) == target (mod q), or None.

    Among minimum-cardinality solutions the lexicographically smallest index
    tuple is returned.
    """
    target %= q
    k = len(values)
    # best[i][r]: lexicographically smallest min-size index tuple drawn from
    # values[i:] reaching residue r, built right to left so that prefixes
    # compare correctly.
    best: list[Optional[tuple[int, ...]]] = [None] * q
    best[0] = ()
    for i in range(k - 1, -1, -1):
        c = values[i] % q
        nxt = list(best)
        for r in range(q):
            tail = best[(r - c) % q]
            if tail is None:
                continue
            cand = (i,) + tail
            cur = nxt[r]
            if cur is None or (len(cand), cand) < (len(cur), cur):
                nxt[r] = cand
        best = nxt
    return best[target]
