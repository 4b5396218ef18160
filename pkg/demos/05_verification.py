"""
Running the verification suites
===============================

Each suite returns a report of named checks and raises if one fails.
"""
# %%
from tournaments.verify import run_suite

# %%
for suite in ("thm13", "prop11", "remark45", "lemmas"):
    for rep in run_suite(suite, range(3, 5)):
        print(rep.lines()[-1])

# %%
# The full list of checks behind one report.
(rep,) = run_suite("remark45", [3])
print("\n".join(rep.lines()))
