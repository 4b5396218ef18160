"""Verification pipelines for the (-1)-critical characterization.

Each ``verify_*`` function returns a :class:`Report` and raises
:class:`~tournaments.errors.VerificationFailed` (carrying the report) as
soon as the report holds a failed check.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .census import cached_census, indecomposable_sample
from .core import Tournament, apply, dual, members, to_mask
from .criticality import PATH, classify, component_shapes
from .er_partition import compute_partition, find_indecomposable_extension_pair
from .errors import VerificationFailed
from .families import (
    FamilySpec,
    build,
    critical_members,
    dual_isomorphism,
    minus1_specs,
)
from .intervals import _indecomposable, _is_interval, is_indecomposable
from .isomorphism import canonical_form, find_isomorphism

EXHAUSTIVE_ORDER = 7


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        out = [f"== {self.title}"]
        for c in self.checks:
            tail = f" ({c.detail})" if c.detail else ""
            out.append(f"{'PASS' if c.passed else 'FAIL'} {c.name}{tail}")
        out += [f"note: {n}" for n in self.notes]
        out.append(f"{self.title}: {'ok' if self.ok else 'FAILED'}")
        return out

    def finish(self) -> "Report":
        if not self.ok:
            first = self.failures()[0]
            raise VerificationFailed(f"{self.title}: {first.name} {first.detail}".strip(), self)
        return self


def _pairwise_non_isomorphic(labelled: list[tuple[str, Tournament]]):
    for (na, a), (nb, b) in combinations(labelled, 2):
        p = find_isomorphism(a, b)
        if p is not None:
            return f"{na} ~ {nb} via {list(p)}"
    return None


def verify_minus1_classification(n: int, jobs: int = 1) -> Report:
    """The 6(n-2) family members of order 2n+1 are (-1)-critical with
    non-critical vertex 2k+1, pairwise non-isomorphic, and (at order 7)
    exactly the k = 1 classes of the census."""
    specs = minus1_specs(n)
    m = 2 * n + 1
    rep = Report(f"thm13 n={n} (order {m})")
    labelled = [(s.label, s.build()) for s in specs]
    for spec, (label, t) in zip(specs, labelled):
        if not rep.check(f"{label} indecomposable", is_indecomposable(t)):
            continue
        nc = classify(t).non_critical
        rep.check(f"{label} unique non-critical vertex is {2 * spec.k + 1}",
                  nc == {2 * spec.k + 1}, f"non-critical {sorted(nc)}")
    clash = _pairwise_non_isomorphic(labelled)
    rep.check("members pairwise non-isomorphic", clash is None, clash or "")
    rep.check("count = 6(n-2) = 3m-15", len(specs) == 6 * (n - 2) == 3 * m - 15,
              f"{len(specs)} members")
    if m <= EXHAUSTIVE_ORDER:
        result = cached_census(m, jobs)
        found = result.forms_with_k(1)
        expected = {canonical_form(t) for _, t in labelled}
        rep.check(f"census order {m}: k=1 classes are exactly the members",
                  found == expected,
                  f"{len(found)} census classes, {len(expected)} members")
    else:
        rep.notes.append(f"order {m} > {EXHAUSTIVE_ORDER}: constructive check only")
    return rep.finish()


def verify_critical_classification(n: int, jobs: int = 1) -> Report:
    m = 2 * n + 1
    rep = Report(f"prop11 n={n} (order {m})")
    labelled = list(zip((f"T_{m}", f"U_{m}", f"V_{m}"), critical_members(n)))
    for label, t in labelled:
        if rep.check(f"{label} indecomposable", is_indecomposable(t)):
            r = classify(t)
            rep.check(f"{label} critical (k=0)", r.k == 0, f"k={r.k}")
    clash = _pairwise_non_isomorphic(labelled)
    rep.check("T, U, V pairwise non-isomorphic", clash is None, clash or "")
    if m <= EXHAUSTIVE_ORDER:
        result = cached_census(m, jobs)
        found = result.forms_with_k(0)
        expected = {canonical_form(t) for _, t in labelled}
        rep.check(f"census order {m}: k=0 classes are exactly T, U, V",
                  found == expected, f"{len(found)} census classes")
        if m == 5:
            rep.check("census order 5: every indecomposable tournament is critical",
                      set(result.histogram) == {0}, f"histogram {result.histogram}")
        rep.notes.append(
            f"observed at order {m}: {len(result.classes)} indecomposable classes, "
            f"histogram {result.histogram}"
        )
    return rep.finish()


def expected_graph_edges(tag: str, n: int, k: int) -> set[frozenset[int]]:
    """Edges of I(T) for the (-1)-critical families, as edits of the path P_{2n+1}."""
    path = {frozenset((i, i + 1)) for i in range(2 * n)}
    base = tag.replace("dual", "")
    if base in ("E", "F"):
        return path
    if base == "G":
        return path - {frozenset((2 * n - 1, 2 * n))}
    drop = {frozenset(e) for e in ((2 * n - 1, 2 * n), (2 * k - 1, 2 * k), (2 * k, 2 * k + 1))}
    return (path - drop) | {frozenset((2 * k - 1, 2 * k + 1))}


ISOLATED_COUNT = {"E": 0, "F": 0, "G": 1, "H": 2}


def verify_graph_shapes(n: int) -> Report:
    rep = Report(f"remark45 n={n} (order {2 * n + 1})")
    for spec in minus1_specs(n):
        t = spec.build()
        r = classify(t)
        want = expected_graph_edges(spec.tag, n, spec.k)
        rep.check(f"I({spec.label}) equals the stated edit of P_{2 * n + 1}",
                  set(r.graph.edges) == want,
                  f"got {r.graph.sorted_edges()}")
        iso = len(r.graph.isolated())
        rep.check(f"I({spec.label}) has {ISOLATED_COUNT[spec.tag[0]]} isolated vertices",
                  iso == ISOLATED_COUNT[spec.tag[0]] and iso <= 2, f"{iso} isolated")
        rep.check(f"I({spec.label}) = I(dual)",
                  classify(dual(t)).graph == r.graph)
    return rep.finish()


def decomposition_witness(tag: str, n: int, k: int, i: int) -> frozenset[int]:
    """The nontrivial interval of ``W - i`` named in the decomposability
    argument, for ``i != 2k+1``.  Duals share intervals with their base."""
    base = tag.replace("dual", "")
    if i == 2 * k + 1:
        raise ValueError("vertex 2k+1 is the non-critical vertex")
    if i == 0:
        return frozenset(range(2, 2 * n + 1))
    if i == 2 * n:
        return frozenset(range(0, 2 * n - 1))
    if i == 2 * k - 1:
        return frozenset((i - 1, i + 2)) if base == "H" else frozenset((i - 1, i + 1))
    if i == 2 * n - 1 and base in ("G", "H"):
        return frozenset(range(0, 2 * n - 2)) | {2 * n}
    return frozenset((i - 1, i + 1))


def _witness_checks(rep: Report, spec: FamilySpec, t: Tournament):
    full = t.full_mask
    a = 2 * spec.k + 1
    bad = []
    for i in range(t.n):
        if i == a:
            continue
        w = decomposition_witness(spec.tag, spec.n, spec.k, i)
        universe = full & ~(1 << i)
        mask = to_mask(w, t.n)
        nontrivial = 2 <= len(w) <= t.n - 2 and not mask & (1 << i)
        if not (nontrivial and _is_interval(t.rows, mask, universe)):
            bad.append((i, sorted(w)))
    rep.check(f"{spec.label}: named witnesses are nontrivial intervals of W - i",
              not bad, f"failing {bad}" if bad else "")
    rep.check(f"{spec.label}: W - {a} indecomposable",
              _indecomposable(t.rows, full & ~(1 << a)))


def _lemma_checks(rep: Report, spec: FamilySpec, t: Tournament):
    r = classify(t)
    g = r.graph
    a = 2 * spec.k + 1
    full = t.full_mask
    problems = []
    for x in sorted(r.critical):
        nbrs = sorted(g.neighbours(x))
        if len(nbrs) > 2:
            problems.append(f"deg({x})={len(nbrs)}")
        elif len(nbrs) == 1:
            y = nbrs[0]
            if not _is_interval(t.rows, full & ~(1 << x) & ~(1 << y), full & ~(1 << x)):
                problems.append(f"S-{{{x},{y}}} not an interval of T-{x}")
        elif len(nbrs) == 2:
            if not _is_interval(t.rows, to_mask(nbrs, t.n), full & ~(1 << x)):
                problems.append(f"{nbrs} not an interval of T-{x}")
    rep.check(f"{spec.label}: critical-vertex degree/interval dichotomy",
              not problems, "; ".join(problems))
    big = [(c, shape) for c, shape in component_shapes(g) if len(c) >= 2]
    rep.check(f"{spec.label}: unique component of size >= 2", len(big) == 1,
              f"{len(big)} components")
    rep.check(f"{spec.label}: non-critical vertex {a} has degree 2", g.degree(a) == 2,
              f"degree {g.degree(a)}")
    rep.check(f"{spec.label}: big component is a path",
              len(big) == 1 and big[0][1] == PATH,
              f"shapes {[s for _, s in big]}")
    rep.check(f"{spec.label}: same non-critical set as the dual",
              classify(dual(t)).non_critical == r.non_critical)


def verify_lemmas(n: int) -> Report:
    rep = Report(f"lemmas n={n} (order {2 * n + 1})")
    for spec in minus1_specs(n):
        t = spec.build()
        _lemma_checks(rep, spec, t)
        _witness_checks(rep, spec, t)
    return rep.finish()


def proof_classifications(rep: Report, n: int):
    """ER classifications used in the induction over ``n`` for E, F, G, H."""
    for k in range(1, n - 1):
        a = 2 * k + 1
        for tag in ("E", "F", "G", "H"):
            spec = FamilySpec(tag, n, k)
            t = spec.build()
            full = t.full_mask
            if n == k + 2:
                x = full & ~(1 << a) & ~(1 << (a + 1))
                part = compute_partition(t, x)
                rep.check(f"{spec.label}: {a} in X({a + 2})", a in part.attached[a + 2])
                rep.check(f"{spec.label}: {a + 1} in Ext(X)", a + 1 in part.ext)
            else:
                xn = full & ~(1 << (a + 1)) & ~(1 << (a + 2))
                part = compute_partition(t, xn)
                rep.check(f"{spec.label}: {a + 1} in X_n({a + 3})", a + 1 in part.attached[a + 3])
                rep.check(f"{spec.label}: {a + 2} in X_n({a})", a + 2 in part.attached[a])
                part2 = compute_partition(t, xn & ~(1 << a))
                rep.check(f"{spec.label}: {a + 1} in X'_n({a + 3})",
                          a + 1 in part2.attached[a + 3])
                rep.check(f"{spec.label}: {a + 2} in Ext(X'_n)", a + 2 in part2.ext)


def er_instance_checks(t: Tournament, x: int) -> list[str]:
    """Partition and pairwise-extension statements for one ``(T, X)``; returns
    the list of violations (empty when everything holds)."""
    problems = []
    part = compute_partition(t, x)
    outside = members(t.full_mask & ~x)
    blocks = part.blocks()
    if sum(len(b) for b in blocks) != len(outside) or part.covered() != outside:
        problems.append("not a partition of S - X")
    rows = t.rows
    for u, block in part.attached.items():
        for v in block:
            if not _is_interval(rows, (1 << u) | (1 << v), x | (1 << v)):
                problems.append(f"{{{u},{v}}} not an interval of T(X+{v})")
    for y, z in combinations(sorted(outside), 2):
        pair = x | (1 << y) | (1 << z)
        if _indecomposable(rows, pair):
            continue
        for first, second in ((y, z), (z, y)):
            u = part.attached_to(first)
            if u is not None and second not in part.attached[u]:
                if not _is_interval(rows, (1 << u) | (1 << first), pair):
                    problems.append(f"X({u}) clause fails for {first},{second}")
            if first in part.bracket and second not in part.bracket:
                if not _is_interval(rows, x | (1 << second), pair):
                    problems.append(f"[X] clause fails for {first},{second}")
        if y in part.ext and z in part.ext and not _is_interval(rows, (1 << y) | (1 << z), pair):
            problems.append(f"Ext clause fails for {y},{z}")
    if _indecomposable(rows, t.full_mask) and len(outside) >= 2:
        xa, xb = find_indecomposable_extension_pair(t, x)
        if not _indecomposable(rows, x | (1 << xa) | (1 << xb)):
            problems.append(f"extension pair ({xa},{xb}) is not indecomposable")
    return problems


def er_instances(tournaments, limit: int, min_size: int = 3):
    """Deterministic ``(T, X)`` pairs with ``T(X)`` indecomposable and ``|X| >= 3``.

    Subsets of each tournament are walked as ``i * stride mod 2**n`` (odd
    stride, so every subset comes up) to mix sizes and positions.
    """
    out = []
    per = -(-limit // max(1, len(tournaments)))
    stride = 0x9E3779B1
    for t in tournaments:
        got = 0
        size = 1 << t.n
        for i in range(size):
            x = i * stride % size
            if x == t.full_mask:
                continue
            if x.bit_count() < min_size or not _indecomposable(t.rows, x):
                continue
            out.append((t, x))
            got += 1
            if got >= per:
                break
    return out


def verify_er(n_values=(3, 4, 5), census_sample: int = 200, instances: int = 1000) -> Report:
    rep = Report("er partition")
    for n in n_values:
        proof_classifications(rep, n)
    pool = [s.build() for n in n_values for s in minus1_specs(n)]
    pool += indecomposable_sample(EXHAUSTIVE_ORDER, census_sample)
    cases = er_instances(pool, instances)
    bad = []
    for t, x in cases:
        for problem in er_instance_checks(t, x):
            bad.append(f"n={t.n} X={sorted(members(x))}: {problem}")
    rep.check(f"partition and extension statements on {len(cases)} (T, X) instances",
              not bad and len(cases) >= instances, "; ".join(bad[:3]) or f"{len(cases)} instances")
    return rep.finish()


def verify_dual_isomorphisms(n: int) -> Report:
    rep = Report(f"dual isomorphisms n={n}")
    for tag in ("E", "H"):
        for k in range(1, n - 1):
            sigma = dual_isomorphism(tag, n, k)
            got = apply(dual(build(tag, n, k)), sigma)
            rep.check(f"sigma maps dual({tag}(n={n},k={k})) onto {tag}(n={n},k={n - k - 1})",
                      got == build(tag, n, n - k - 1))
    return rep.finish()


def run_suite(suite: str, n_values, jobs: int = 1) -> list[Report]:
    """Run one named suite over ``n_values``; raises on the first failing report."""
    n_values = list(n_values)
    if suite == "thm13":
        return [verify_minus1_classification(n, jobs) for n in n_values]
    if suite == "prop11":
        return [verify_critical_classification(n, jobs) for n in n_values]
    if suite == "remark45":
        return [verify_graph_shapes(n) for n in n_values]
    if suite == "lemmas":
        reports = [verify_lemmas(n) for n in n_values]
        reports += [verify_dual_isomorphisms(n) for n in n_values]
        reports.append(verify_er(tuple(n for n in n_values if n <= 5) or (3,)))
        return reports
    raise ValueError(f"unknown suite {suite!r}")


SUITES = ("thm13", "prop11", "remark45", "lemmas")
