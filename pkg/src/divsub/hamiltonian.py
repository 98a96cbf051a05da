"""Hamiltonian cycles made of one red and one blue path of even length in 2-coloured K_2n.

Colours are Z_2 weights: red = 1, blue = 0. A split cycle is stored as a
vertex sequence plus two cut positions ``(i, j)``: positions i..j form one
segment and j..i (wrapping) the other. A monochromatic Hamiltonian cycle
counts as a split with an empty second path.

Two routes are provided. The search route explores Hamiltonian paths that
change colour at most once. The constructive route takes a partition into
monochromatic cycles (found by complete search) and rebuilds the cycle case
by case.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .subdivision import Verdict
from .weighted import Weighting, default_guard, edge_count, GuardExceeded, iter_weight_tuples

__all__ = [
    "RED",
    "BLUE",
    "TheoremViolation",
    "EvenSplitCycle",
    "PartitionOutcome",
    "coloring_from_red_edges",
    "verify_split",
    "find_even_split",
    "monochromatic_hamiltonian_cycle",
    "partition_oracle",
    "partition_outcomes",
    "check_partition_outcome",
    "construct_from_partition",
    "ExhaustiveResult",
    "exhaustive_check",
    "split_to_json",
    "split_from_json",
    "FIG_K4",
    "SEARCH_LIMIT",
]

RED, BLUE = 1, 0
SEARCH_LIMIT = 12


class TheoremViolation(AssertionError):
    """A branch the existence proof rules out was reached, or a construction failed to verify."""


@dataclass(frozen=True)
class EvenSplitCycle:
    cycle: tuple[int, ...]
    kind: str  # "mono" or "two"
    boundaries: Optional[tuple[int, int]] = None

    def segments(self) -> list[tuple[int, ...]]:
        c = self.cycle
        if self.kind == "mono":
            return [c + (c[0],)]
        i, j = self.boundaries
        first = c[i : j + 1]
        second = c[j:] + c[: i + 1]
        return [first, second]


@dataclass(frozen=True)
class PartitionOutcome:
    """One of the three partition shapes.

    ``kind`` 3: ``cycle1`` is a monochromatic cycle on all or all-but-one vertices.
    ``kind`` 2: ``cycle1`` spans V1 and ``pair`` is V2, an edge of the other colour.
    ``kind`` 1: ``cycle1`` spans V1 and ``cycle2`` spans V2, differently coloured.
    """

    kind: int
    cycle1: tuple[int, ...]
    color1: int
    cycle2: Optional[tuple[int, ...]] = None
    pair: Optional[tuple[int, int]] = None


def coloring_from_red_edges(f: int, red_edges) -> Weighting:
    red = {(min(u, v), max(u, v)) for u, v in red_edges}
    return Weighting.from_function(f, 2, lambda u, v: RED if (u, v) in red else BLUE)


# Figure K4 of the tightness remark: red path 0-1-2-3, blue elsewhere.
FIG_K4 = coloring_from_red_edges(4, [(0, 1), (1, 2), (2, 3)])


def _check_coloring(C: Weighting) -> None:
    if C.q != 2:
        raise ValueError(f"a 2-colouring is a Z_2 weighting, got q={C.q}")


def _mono(C: Weighting, path: Sequence[int]) -> Optional[int]:
    m = C.matrix
    colors = {m[a][b] for a, b in zip(path, path[1:])}
    return colors.pop() if len(colors) == 1 else None


def verify_split(C: Weighting, S: EvenSplitCycle) -> Verdict:
    _check_coloring(C)
    cyc = S.cycle
    if any(not 0 <= x < C.f for x in cyc):
        raise ValueError("cycle references a vertex outside the host")
    if sorted(cyc) != list(range(C.f)):
        return Verdict(False, "cycle is not Hamiltonian")
    if C.f < 3:
        return Verdict(False, "no Hamiltonian cycle on fewer than 3 vertices")
    if S.kind == "mono":
        if _mono(C, cyc + (cyc[0],)) is None:
            return Verdict(False, "cycle is not monochromatic")
        if C.f % 2:
            return Verdict(False, f"monochromatic cycle has odd length {C.f}")
        return Verdict(True)
    if S.kind != "two" or S.boundaries is None:
        raise ValueError(f"malformed split {S.kind!r}")
    i, j = S.boundaries
    if not 0 <= i < j < C.f:
        raise ValueError(f"boundaries {S.boundaries} must satisfy 0 <= i < j < f")
    colors = []
    for seg in S.segments():
        c = _mono(C, seg)
        if c is None:
            return Verdict(False, f"segment {seg} is not monochromatic")
        if (len(seg) - 1) % 2:
            return Verdict(False, f"segment {seg} has odd length {len(seg) - 1}")
        colors.append(c)
    if colors[0] == colors[1]:
        return Verdict(False, "both segments have the same colour")
    return Verdict(True)


def _split_from_segments(first: Sequence[int], second: Sequence[int]) -> EvenSplitCycle:
    """Glue a path a..b with a path b..a into a split cycle."""
    first, second = tuple(first), tuple(second)
    if len(second) <= 1 or len(first) <= 1:
        path = first if len(first) > 1 else second
        return EvenSplitCycle(path[:-1], "mono")
    cycle = first + second[1:-1]
    return EvenSplitCycle(cycle, "two", (0, len(first) - 1))


def _normalize(C: Weighting, S: EvenSplitCycle) -> EvenSplitCycle:
    """Report two same-coloured segments as one monochromatic cycle."""
    if S.kind == "two":
        segs = S.segments()
        c0, c1 = _mono(C, segs[0]), _mono(C, segs[1])
        if c0 is not None and c0 == c1:
            return EvenSplitCycle(S.cycle, "mono")
    return S


def _search_split(C: Weighting) -> Optional[EvenSplitCycle]:
    """Complete search: a Hamiltonian cycle changing colour at most at two even positions."""
    f = C.f
    m = C.matrix
    full = (1 << f) - 1
    for first_color in (RED, BLUE):
        second_color = 1 - first_color
        for u in range(f):
            failed: set = set()
            path = [u]

            def grow(x: int, used: int, phase: int, length: int) -> bool:
                # phase 0: still in first colour; phase 1: in second colour
                key = (x, used, phase, length & 1)
                if key in failed:
                    return False
                if used == full:
                    back = m[x][u]
                    if phase == 0 and back == first_color and f % 2 == 0:
                        return True
                    if phase == 1 and back == second_color and (f - length) % 2 == 1:
                        return True
                    failed.add(key)
                    return False
                row = m[x]
                for y in range(f):
                    if used >> y & 1:
                        continue
                    c = row[y]
                    if phase == 0:
                        if c == first_color:
                            nxt = 0
                        elif length % 2 == 0 and length > 0:
                            nxt = 1
                        else:
                            continue
                    elif c == second_color:
                        nxt = 1
                    else:
                        continue
                    path.append(y)
                    if grow(y, used | 1 << y, nxt, length + 1):
                        return True
                    path.pop()
                failed.add(key)
                return False

            if grow(u, 1 << u, 0, 0):
                cyc = tuple(path)
                # locate the colour change
                colors = [m[a][b] for a, b in zip(cyc, cyc[1:])]
                if all(c == first_color for c in colors):
                    return EvenSplitCycle(cyc, "mono")
                k = colors.index(second_color)
                return EvenSplitCycle(cyc, "two", (0, k))
    return None


def monochromatic_hamiltonian_cycle(
    C: Weighting, vertices: Sequence[int], color: int
) -> Optional[tuple[int, ...]]:
    """A Hamiltonian cycle of the ``color`` subgraph induced on ``vertices``, or None."""
    vs = sorted(vertices)
    k = len(vs)
    if k < 3:
        return None
    m = C.matrix
    pos = {v: i for i, v in enumerate(vs)}
    nbr = [0] * k
    for i, a in enumerate(vs):
        for j, b in enumerate(vs):
            if i != j and m[a][b] == color:
                nbr[i] |= 1 << j
    if any(bin(x).count("1") < 2 for x in nbr):
        return None
    full = (1 << k) - 1
    failed: set = set()
    path = [0]

    def grow(i: int, used: int) -> bool:
        if used == full:
            return bool(nbr[i] & 1)
        if (i, used) in failed:
            return False
        cand = nbr[i] & ~used
        while cand:
            low = cand & -cand
            j = low.bit_length() - 1
            cand ^= low
            path.append(j)
            if grow(j, used | low):
                return True
            path.pop()
        failed.add((i, used))
        return False

    if grow(0, 1):
        return tuple(vs[i] for i in path)
    return None


def _outcomes_long_cycle(C: Weighting):
    everything = list(range(C.f))
    for color in (RED, BLUE):
        cyc = monochromatic_hamiltonian_cycle(C, everything, color)
        if cyc is not None:
            yield PartitionOutcome(3, cyc, color)
    for v in everything:
        rest = [x for x in everything if x != v]
        for color in (RED, BLUE):
            cyc = monochromatic_hamiltonian_cycle(C, rest, color)
            if cyc is not None:
                yield PartitionOutcome(3, cyc, color)


def _outcomes_cycle_plus_edge(C: Weighting):
    everything = list(range(C.f))
    for y1, y2 in combinations(everything, 2):
        color = 1 - C(y1, y2)
        rest = [x for x in everything if x not in (y1, y2)]
        cyc = monochromatic_hamiltonian_cycle(C, rest, color)
        if cyc is not None:
            yield PartitionOutcome(2, cyc, color, pair=(y1, y2))


def _outcomes_two_cycles(C: Weighting):
    everything = list(range(C.f))
    for size in range(3, C.f // 2 + 1):
        for part2 in combinations(everything, size):
            part1 = [x for x in everything if x not in part2]
            for color in (RED, BLUE):
                c1 = monochromatic_hamiltonian_cycle(C, part1, color)
                if c1 is None:
                    continue
                c2 = monochromatic_hamiltonian_cycle(C, part2, 1 - color)
                if c2 is not None:
                    yield PartitionOutcome(1, c1, color, cycle2=c2)


_SHAPES = {3: _outcomes_long_cycle, 2: _outcomes_cycle_plus_edge, 1: _outcomes_two_cycles}


def partition_oracle(C: Weighting, order: Sequence[int] = (3, 2, 1)) -> PartitionOutcome:
    """First partition outcome found, trying the shapes in ``order``.

    Every colouring of K_f with f >= 5 has at least one outcome; failing to
    find any raises TheoremViolation.
    """
    _check_coloring(C)
    if C.f < 5:
        raise ValueError(f"the partition statement needs at least 5 vertices, got {C.f}")
    for kind in order:
        for out in _SHAPES[kind](C):
            return out
    if sorted(order) != [1, 2, 3]:
        raise LookupError(f"no outcome of shapes {tuple(order)}")
    raise TheoremViolation(f"no partition outcome exists for this colouring of K_{C.f}")


def partition_outcomes(C: Weighting, kind: int):
    """Every outcome of one shape (with repetitions across symmetric relabellings)."""
    _check_coloring(C)
    return _SHAPES[kind](C)


def check_partition_outcome(C: Weighting, out: PartitionOutcome) -> Verdict:
    """Re-check an outcome against the defining clauses of its shape."""
    f = C.f

    def is_mono_cycle(cyc, color) -> bool:
        return len(cyc) >= 3 and len(set(cyc)) == len(cyc) and _mono(C, tuple(cyc) + (cyc[0],)) == color

    if not is_mono_cycle(out.cycle1, out.color1):
        return Verdict(False, "first cycle is not a monochromatic cycle of the stated colour")
    if out.kind == 3:
        if len(out.cycle1) not in (f, f - 1):
            return Verdict(False, f"cycle length {len(out.cycle1)} is neither f nor f-1")
        return Verdict(True)
    if out.kind == 2:
        y1, y2 = out.pair
        if sorted(out.cycle1 + (y1, y2)) != list(range(f)):
            return Verdict(False, "V1 and V2 do not partition the vertices")
        if C(y1, y2) == out.color1:
            return Verdict(False, "edge in V2 has the cycle's colour")
        return Verdict(True)
    if out.kind == 1:
        c2 = out.cycle2
        if sorted(out.cycle1 + c2) != list(range(f)):
            return Verdict(False, "V1 and V2 do not partition the vertices")
        if not len(out.cycle1) >= len(c2) >= 3:
            return Verdict(False, "part sizes violate |V1| >= |V2| >= 3")
        if not is_mono_cycle(c2, 1 - out.color1):
            return Verdict(False, "second cycle is not monochromatic in the other colour")
        return Verdict(True)
    return Verdict(False, f"unknown outcome kind {out.kind}")


def _checked(C: Weighting, S: EvenSplitCycle, where: str) -> EvenSplitCycle:
    S = _normalize(C, S)
    v = verify_split(C, S)
    if not v:
        raise TheoremViolation(f"{where}: constructed cycle fails verification ({v.reason})")
    return S


def _case_long_cycle(C: Weighting, cyc: tuple[int, ...]) -> EvenSplitCycle:
    f = C.f
    if len(cyc) == f:
        return _checked(C, EvenSplitCycle(cyc, "mono"), "monochromatic Hamiltonian cycle")
    (y,) = set(range(f)) - set(cyc)
    k = len(cyc)
    for i in range(k):
        a, b = cyc[i], cyc[(i + 1) % k]
        if C(a, y) == C(b, y):
            # b -> ... -> a along the cycle, then a y b
            around = tuple(cyc[(i + 1 + r) % k] for r in range(k))
            return _checked(C, _split_from_segments(around, (a, y, b)), "odd cycle patch")
    raise TheoremViolation("odd cycle with no equal-coloured consecutive pair towards the spare vertex")


def _case_cycle_plus_edge(C: Weighting, cyc: tuple[int, ...], pair: tuple[int, int]) -> EvenSplitCycle:
    """V1 spans a colour-r cycle x_1..x_k, V2 = {y_1, y_2} is joined by the other colour."""
    r = _mono(C, cyc + (cyc[0],))
    k = len(cyc)
    if k < 4:
        raise TheoremViolation("cycle on V1 has fewer than 4 vertices")
    for j in (0, 1):
        for i in range(k):
            for step in (1, -1):
                if C(pair[j], cyc[i]) != r:
                    continue
                # relabel: x_1 = cyc[i], walking in direction ``step``; y_1 = pair[j]
                xs = [cyc[(i + step * s) % k] for s in range(k)]
                y1, y2 = pair[j], pair[1 - j]
                x = lambda n: xs[(n - 1) % k]  # noqa: E731
                if C(y2, x(2)) != r:
                    # blue y1 y2 x2, red x2 x3 ... x_k x1 y1
                    red = tuple(xs[1:]) + (x(1), y1)
                    return _checked(C, _split_from_segments(red, (y1, y2, x(2))), "cycle plus edge, y2x2")
                if C(y1, x(3)) != r:
                    # blue y2 y1 x3, red x3 x4 ... x2 y2
                    red = tuple(xs[2:]) + (x(1), x(2), y2)
                    return _checked(C, _split_from_segments(red, (y2, y1, x(3))), "cycle plus edge, y1x3")
                if C(y2, x(4)) != r:
                    # blue y1 y2 x4, red x4 ... x3 y1
                    red = tuple(xs[3:]) + (x(1), x(2), x(3), y1)
                    return _checked(C, _split_from_segments(red, (y1, y2, x(4))), "cycle plus edge, y2x4")
                mono = (x(1), y1, x(3), x(2), y2) + tuple(xs[3:])
                return _checked(C, EvenSplitCycle(mono, "mono"), "cycle plus edge, all red")
    # every edge between V1 and V2 has the other colour: x1 y1 x2 y2 x3, then x3 ... x_k x1
    y1, y2 = pair
    blue = (cyc[0], y1, cyc[1], y2, cyc[2])
    red = tuple(cyc[2:]) + (cyc[0],)
    return _checked(C, _split_from_segments(red, blue), "cycle plus edge, all cross edges other colour")


def _case_two_cycles(C: Weighting, big: tuple[int, ...], small: tuple[int, ...]) -> EvenSplitCycle:
    """``big`` spans V1 in colour r, ``small`` spans V2 in the other colour."""
    r = _mono(C, big + (big[0],))
    b = 1 - r
    K, L = len(big), len(small)
    if K % 2:
        for i in range(K):
            for j in range(L):
                xi, xi1 = big[i], big[(i + 1) % K]
                yj, yj1 = small[j], small[(j + 1) % L]
                c = C(xi, yj)
                if c != C(xi1, yj1):
                    continue
                x_rest = tuple(big[(i - s) % K] for s in range(K))  # xi back round to xi1
                y_rest = tuple(small[(j + 1 + s) % L] for s in range(L))  # yj1 round to yj
                if c == r:
                    # yj xi ... xi1 yj1 in r, then yj1 ... yj in b
                    return _checked(C, _split_from_segments((yj,) + x_rest + (yj1,), y_rest), "odd/odd")
                # xi yj ... yj1 xi1 in b, then xi1 ... xi in r
                y_back = tuple(small[(j - s) % L] for s in range(L))  # yj back round to yj1
                x_fwd = tuple(big[(i + 1 + s) % K] for s in range(K))  # xi1 round to xi
                return _checked(C, _split_from_segments((xi,) + y_back + (xi1,), x_fwd), "odd/odd")
        raise TheoremViolation("odd/odd parts with alternating cross colours")

    # even/even
    if all(C(x, y) == b for x in big for y in small):
        t2 = L
        path = []
        for s in range(t2):
            path += [big[s], small[s]]
        path.append(big[t2 % K])
        other = tuple(big[t2:]) + (big[0],)
        return _checked(C, _split_from_segments(tuple(path), other), "even/even, all cross edges other colour")

    reds = [(k, l) for k in range(K) for l in range(L) if C(big[k], small[l]) == r]
    k0, l0 = reds[0]
    # propagate the red cross edge through neighbouring index pairs
    seen = {(k0, l0)}
    todo = [(k0, l0)]
    while todo:
        k, l = todo.pop()
        xk, yl = big[k], small[l]
        for dk in (-1, 1):
            for dl in (-1, 1):
                kk, ll = (k + dk) % K, (l + dl) % L
                x, y = big[kk], small[ll]
                if C(x, y) != r:
                    # drop x xk and y yl, add xk yl (r) and x y (b)
                    red = (yl,) + tuple(big[(k - dk * s) % K] for s in range(K))  # xk away from x, ends at x
                    blue = (x,) + tuple(small[(ll + dl * s) % L] for s in range(L))  # y away from yl, ends at yl
                    return _checked(C, _split_from_segments(red, blue), "even/even, swap")
                if (kk, ll) not in seen:
                    seen.add((kk, ll))
                    todo.append((kk, ll))
    # relabel so that x_1 y_1 is red: x_i y_j red whenever i = j (mod 2)
    xs = [big[(k0 + s) % K] for s in range(K)]
    ys = [small[(l0 + s) % L] for s in range(L)]
    x = lambda i: xs[i - 1]  # noqa: E731
    y = lambda j: ys[j - 1]  # noqa: E731
    t = L // 2
    seq = []
    for i in range(1, 2 * t - 2, 2):
        seq += [x(i), y(i)]
    seq += [x(2 * t - 1), x(2 * t - 2), y(2 * t - 2)]
    for i in range(2, 2 * t - 3, 2):
        seq += [x(i), y(i)]
    seq += [x(i) for i in range(2 * t, K + 1)]
    seq = tuple(seq)
    if len(set(seq)) != len(seq) or _mono(C, seq + (seq[0],)) != r:
        raise TheoremViolation("even/even relinking did not give a monochromatic cycle")
    return _case_cycle_plus_edge(C, seq, (y(2 * t - 1), y(2 * t)))


def construct_from_partition(C: Weighting, outcome: PartitionOutcome) -> EvenSplitCycle:
    _check_coloring(C)
    if C.f % 2:
        raise ValueError("the construction needs an even number of vertices")
    if not check_partition_outcome(C, outcome):
        raise ValueError("outcome does not describe a valid partition of this colouring")
    if outcome.kind == 3:
        return _case_long_cycle(C, outcome.cycle1)
    if outcome.kind == 2:
        return _case_cycle_plus_edge(C, outcome.cycle1, outcome.pair)
    return _case_two_cycles(C, outcome.cycle1, outcome.cycle2)


def find_even_split(C: Weighting, constructive: Optional[bool] = None) -> Optional[EvenSplitCycle]:
    """An even split Hamiltonian cycle, or None when none exists.

    By default hosts with at most ``SEARCH_LIMIT`` vertices are searched
    completely and larger ones go through the partition construction;
    ``constructive`` forces either route.
    """
    _check_coloring(C)
    if C.f % 2:
        raise ValueError(f"need an even number of vertices, got {C.f}")
    if constructive is None:
        constructive = C.f > SEARCH_LIMIT
    if constructive and C.f >= 6:
        return construct_from_partition(C, partition_oracle(C))
    found = _search_split(C)
    return None if found is None else _normalize(C, found)


@dataclass
class ExhaustiveResult:
    n: int
    examined: int
    failures: int
    first_counterexample: Optional[int]

    @property
    def all_pass(self) -> bool:
        return self.failures == 0


def _scan_colorings(job) -> ExhaustiveResult:
    n, start, end, constructive = job
    f = 2 * n
    out = ExhaustiveResult(n, 0, 0, None)
    for idx, ws in enumerate(iter_weight_tuples(f, 2, start, end), start):
        out.examined += 1
        C = Weighting._trusted(f, 2, ws)
        S = find_even_split(C, constructive)
        if S is None or not verify_split(C, S):
            out.failures += 1
            if out.first_counterexample is None:
                out.first_counterexample = idx
    return out


def exhaustive_check(
    n: int,
    shards: int = 1,
    guard: Optional[int] = None,
    start: int = 0,
    end: Optional[int] = None,
    constructive: Optional[bool] = None,
) -> ExhaustiveResult:
    """Run :func:`find_even_split` on every 2-colouring of K_2n with index in [start, end)."""
    from .oracle import shard_ranges

    f = 2 * n
    total = 2 ** edge_count(f)
    end = total if end is None else end
    guard = default_guard() if guard is None else guard
    if end - start > guard:
        raise GuardExceeded(f"{end - start} colourings exceed guard {guard}")
    jobs = [(n, start + a, start + b, constructive) for a, b in shard_ranges(end - start, shards)]
    if len(jobs) == 1:
        parts = [_scan_colorings(jobs[0])]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            parts = list(pool.map(_scan_colorings, jobs))
    firsts = [p.first_counterexample for p in parts if p.first_counterexample is not None]
    return ExhaustiveResult(
        n, sum(p.examined for p in parts), sum(p.failures for p in parts), min(firsts) if firsts else None
    )


def split_to_json(S: EvenSplitCycle) -> dict:
    split = {"kind": S.kind}
    if S.kind == "two":
        split["boundaries"] = list(S.boundaries)
    return {"cycle": list(S.cycle), "split": split}


def split_from_json(doc) -> EvenSplitCycle:
    if isinstance(doc, str):
        doc = json.loads(doc)
    split = doc["split"]
    b = split.get("boundaries")
    return EvenSplitCycle(tuple(doc["cycle"]), split["kind"], tuple(b) if b is not None else None)
