"""
Intervals and indecomposability
===============================

A set of vertices is an interval when everything outside sees it as one
block.  A tournament with only trivial intervals is indecomposable.
"""
# %%
from tournaments import (
    chain,
    enumerate_intervals,
    find_nontrivial_interval,
    from_matrix,
    interval_closure,
    is_indecomposable,
    to_trn,
)

# %%
# The 3-cycle, typed in as an adjacency matrix.
cycle = from_matrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
print(to_trn(cycle))
print("intervals:", [sorted(x) for x in enumerate_intervals(cycle)])
print("indecomposable:", is_indecomposable(cycle))

# %%
# A chain has plenty of intervals: every run of consecutive vertices.
l5 = chain(5)
print("witness:", sorted(find_nontrivial_interval(l5)))
print("closure of {1, 3}:", sorted(interval_closure(l5, {1, 3})))

# %%
# Grow the smallest interval around a pair in the 3-cycle: it swallows
# everything, which is exactly why the 3-cycle is indecomposable.
for pair in ({0, 1}, {0, 2}, {1, 2}):
    print(sorted(pair), "->", sorted(interval_closure(cycle, pair)))
