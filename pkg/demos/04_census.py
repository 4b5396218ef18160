"""
Counting every labeled tournament of order 7
============================================

All 2**21 labeled tournaments are scanned.  Indecomposable ones are binned
by their number k of non-critical vertices and sorted into isomorphism
classes.
"""
# %%
import time

from tournaments import canonical_form, census, minus1_specs

# %%
for m in (4, 5, 6):
    print("\n".join(census(m).summary_lines()), end="\n\n")

# %%
start = time.perf_counter()
r7 = census(7)
print("\n".join(r7.summary_lines()))
print(f"{time.perf_counter() - start:.1f}s")

# %%
# The six k=1 classes are the family members, one each.
names = {canonical_form(s.build()): s.label for s in minus1_specs(3)}
for c in r7.classes_with_k(1):
    print(names[c.canonical], c.labeled_count)
