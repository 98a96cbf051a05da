"""
Two structural detectors over Z_2
=================================

An alternating 4-cycle (weights 1,0,1,0) and a parity ordering, where each
edge weight is fixed by the position of its later endpoint.
"""

from divsub.tree_structure import find_four_config, find_parity_ordering, is_parity_ordering, parity_weighting
from divsub.weighted import all_ones, random_weighting

W = parity_weighting((2, 0, 4, 1, 3))
order = find_parity_ordering(W)
print("recovered ordering", order, is_parity_ordering(W, order))
print("four-config in the same host:", find_four_config(W))

print("all-ones K_4 ordering:", find_parity_ordering(all_ones(4, 2)))
R = random_weighting(6, 2, seed=2)
cfg = find_four_config(R)
print("random K_6 alternating cycle:", cfg and cfg.vertices)
