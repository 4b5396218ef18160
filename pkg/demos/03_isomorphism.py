"""
Isomorphism and canonical forms
===============================
"""
# %%
import random

from tournaments import (
    apply,
    canonical_form,
    dual,
    dual_isomorphism,
    e_family,
    find_isomorphism,
    from_code,
    group_classes,
    h_family,
)

# %%
# E_7^3 is isomorphic to its own dual by reversing the labels.
e = e_family(3, 1)
print("E vs dual(E):", find_isomorphism(e, dual(e)))
print("sigma:", dual_isomorphism("E", 3, 1))
print("E vs H:", find_isomorphism(e, h_family(3, 1)))

# %%
# A canonical form does not care how vertices are labeled.
rng = random.Random(3)
p = tuple(rng.sample(range(7), 7))
print(canonical_form(e).hex() == canonical_form(apply(e, p)).hex())

# %%
# The 64 labeled tournaments on 4 vertices fall into 4 classes.
for cls in group_classes([from_code(4, c) for c in range(64)]):
    print(cls.canonical.hex(), cls.count, cls.representative.scores())
