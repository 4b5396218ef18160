"""
The (-1)-critical families
==========================

Build the E, F, G, H members of order 9 and look at where their single
non-critical vertex sits and what the indecomposability graph looks like.
"""
# %%
from tournaments import classify, component_shapes, minus1_specs

# %%
for spec in minus1_specs(4):
    r = classify(spec.build())
    shapes = ", ".join(f"{shape}{sorted(c)}" for c, shape in r.components)
    print(f"{spec.label:8s} non-critical {sorted(r.non_critical)}  I(T): {shapes}")

# %%
# Isolated vertices in I(T): none for E and F, one for G, two for H.
for spec in minus1_specs(3):
    g = classify(spec.build()).graph
    print(spec.label, "isolated:", sorted(g.isolated()))

# %%
# Shapes also work on any graph you hand them.
from tournaments.criticality import graph_from_edges

print(component_shapes(graph_from_edges(5, [(0, 1), (1, 2), (2, 0), (3, 4)])))
