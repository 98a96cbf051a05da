"""
Red path plus blue path: even split Hamiltonian cycles
======================================================

In a red/blue K_2n with n >= 3 some Hamiltonian cycle is a red path followed
by a blue path, both of even length. K_4 is the exception.
"""

from divsub.hamiltonian import (
    FIG_K4,
    construct_from_partition,
    exhaustive_check,
    find_even_split,
    partition_oracle,
    verify_split,
)
from divsub.weighted import random_weighting

print("K_4 with a red P_4:", find_even_split(FIG_K4))

C = random_weighting(8, 2, seed=9)
S = find_even_split(C)
print("search:", S.cycle, S.kind, [len(seg) - 1 for seg in S.segments()])

# the constructive route: find a partition outcome first, then build from it
out = partition_oracle(C)
print("partition outcome kind", out.kind, "first cycle", out.cycle1)
T = construct_from_partition(C, out)
print("construction:", T.cycle, bool(verify_split(C, T)))

r = exhaustive_check(3, start=0, end=4096, shards=2)
print(f"first 4096 colourings of K_6: {r.examined - r.failures} pass")
print(exhaustive_check(2))
