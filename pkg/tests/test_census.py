import json
from collections import Counter

import numpy as np
import pytest

from tournaments import _batch
from tournaments.census import (
    cached_census,
    census,
    census_shard,
    enumerate_labeled,
    indecomposable_sample,
    labeled_count,
    merge_shards,
    shard_ranges,
)
from tournaments.core import apply, from_code, parse_trn, remove, to_code
from tournaments.criticality import classify, critical_vertices
from tournaments.errors import BadParams, InvariantViolation, TooLarge
from tournaments.families import all_minus1_members, t_family, u_family, v_family
from tournaments.intervals import is_indecomposable
from tournaments.isomorphism import canonical_form

# Frozen from an independent scalar recount (closure-based test on every
# labeled code, no numpy kernels, no orbit marking).
ORDER7_INDECOMPOSABLE = 973680
ORDER7_HISTOGRAM = {0: 10800, 1: 30240, 2: 151200, 3: 282240, 4: 181440, 5: 221760, 6: 73920, 7: 22080}
# Exhaustive definitional scans at orders 5 and 6 (brute-force intervals).
ORDER5_INDECOMPOSABLE = 264
ORDER6_INDECOMPOSABLE = 10320
ORDER6_HISTOGRAM = {2: 2160, 3: 5760, 4: 2160, 6: 240}


def scalar_census(m):
    hist, forms = Counter(), {}
    for code in range(labeled_count(m)):
        t = from_code(m, code)
        if not is_indecomposable(t):
            continue
        k = m - len(critical_vertices(t))
        hist[k] += 1
        forms.setdefault(canonical_form(t), k)
    return hist, forms


def test_enumerate_counts():
    seen = []
    assert enumerate_labeled(3, lambda c, t: seen.append(c)) == 8
    assert seen == list(range(8))
    indec = []
    assert enumerate_labeled(4, lambda c, t: indec.append(is_indecomposable(t))) == 64
    assert not any(indec)
    assert enumerate_labeled(5, lambda c, t: None, 10, 20) == 10
    with pytest.raises(BadParams):
        enumerate_labeled(3, lambda c, t: None, 5, 9)
    with pytest.raises(TooLarge):
        enumerate_labeled(9, lambda c, t: None)


def test_code_bit_order():
    # bit t orients the t-th upper pair in row-major order
    assert from_code(3, 0b001).arc(0, 1)
    assert from_code(3, 0b010).arc(0, 2)
    assert from_code(3, 0b100).arc(1, 2)
    assert from_code(3, 0).arc(1, 0)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6])
def test_batch_kernels_match_scalar_route(m):
    codes = np.arange(labeled_count(m), dtype=np.uint64)
    rows = _batch.code_rows(m, codes)
    assert (_batch.rows_codes(m, rows) == codes).all()
    dec = _batch.decomposable(rows, m)
    nc = _batch.non_critical_masks(rows, m)
    for code in range(labeled_count(m)):
        t = from_code(m, code)
        assert tuple(int(r) for r in rows[code]) == t.rows
        assert bool(dec[code]) == (not is_indecomposable(t))
        if is_indecomposable(t) and m >= 3:
            want = sum(1 << v for v in classify(t).non_critical)
            assert int(nc[code]) == want


def test_batch_kernels_sampled_at_order7():
    rng = np.random.default_rng(7)
    codes = rng.integers(0, labeled_count(7), size=3000, dtype=np.uint64)
    rows = _batch.code_rows(7, codes)
    dec = _batch.decomposable(rows, 7)
    nc = _batch.non_critical_masks(rows, 7)
    for i, code in enumerate(codes.tolist()):
        t = from_code(7, code)
        assert bool(dec[i]) == (not is_indecomposable(t))
        if not dec[i]:
            assert int(nc[i]) == sum(1 << v for v in classify(t).non_critical)


def test_orbit_and_permute_codes():
    t = u_family(2)
    orbit = set(_batch.orbit_codes(5, t.rows).tolist())
    p = (2, 0, 4, 1, 3)
    assert to_code(apply(t, p)) in orbit
    moved = _batch.permute_codes(5, np.array([to_code(t)], dtype=np.uint64), p)
    assert int(moved[0]) == to_code(apply(t, p))


def test_small_orders():
    assert census(4).indecomposable == 0
    assert census(4).histogram == {}
    r5 = census(5)
    assert r5.indecomposable == ORDER5_INDECOMPOSABLE
    assert r5.histogram == {0: ORDER5_INDECOMPOSABLE}
    assert r5.forms_with_k(0) == {canonical_form(f(2)) for f in (t_family, u_family, v_family)}
    r6 = census(6)
    assert r6.indecomposable == ORDER6_INDECOMPOSABLE
    assert r6.histogram == ORDER6_HISTOGRAM
    assert 1 not in r6.histogram


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_census_matches_scalar_recount(m):
    hist, forms = scalar_census(m)
    r = census(m)
    assert r.histogram == dict(hist)
    assert {c.canonical: c.k for c in r.classes} == forms


def test_order3_convention():
    r = census(3)
    assert r.indecomposable == 2
    assert r.histogram == {3: 2}
    assert r.small_order


def test_orders_one_and_two():
    assert census(1).histogram == {1: 1}
    assert census(2).indecomposable == 2


@pytest.mark.parametrize("shards", [1, 2, 3, 7, 64])
def test_shard_layout_does_not_matter(shards):
    base = census(5)
    r = census(5, shards=shards)
    assert r.to_dict() == base.to_dict()
    assert r.checksum == base.checksum == labeled_count(5) * (labeled_count(5) - 1) // 2


def test_shard_ranges_tile():
    for total, shards in [(1024, 3), (8, 8), (8, 20), (2**21, 8)]:
        ranges = shard_ranges(total, shards)
        assert ranges[0][0] == 0 and ranges[-1][1] == total
        assert all(a[1] == b[0] for a, b in zip(ranges, ranges[1:]))


def test_merge_rejects_gaps_and_tampering():
    parts = [census_shard(5, lo, hi) for lo, hi in shard_ranges(1024, 4)]
    with pytest.raises(InvariantViolation):
        merge_shards(5, parts[:2] + parts[3:])
    parts[1].histogram[0] += 1
    with pytest.raises(InvariantViolation):
        merge_shards(5, parts)


def test_relabeled_enumeration_gives_same_classes():
    p = (3, 5, 0, 2, 1, 4)
    a, b = census(6), census(6, relabel=p)
    assert a.histogram == b.histogram
    assert [c.canonical for c in a.classes] == [c.canonical for c in b.classes]


def test_parallel_jobs_match():
    assert census(6, jobs=2).to_dict() == census(6).to_dict()


def test_order7_against_frozen_recount():
    r = cached_census(7)
    assert r.labeled == 2**21
    assert r.indecomposable == ORDER7_INDECOMPOSABLE
    assert r.histogram == ORDER7_HISTOGRAM
    assert sum(c.labeled_count for c in r.classes) == ORDER7_INDECOMPOSABLE
    assert r.forms_with_k(1) == {canonical_form(t) for t in all_minus1_members(3)}
    for c in r.classes_with_k(1):
        assert 5040 % c.labeled_count == 0


def test_order_limits():
    with pytest.raises(TooLarge):
        census(8)
    with pytest.raises(TooLarge):
        census(9, allow_large=True)
    with pytest.raises(BadParams):
        census(0)


def test_json_report():
    r = census(5)
    doc = json.loads(r.to_json())
    assert doc["order"] == 5 and doc["labeled"] == 1024
    assert doc["histogram"] == {"0": 264}
    assert len(doc["classes"]) == 3
    for rec in doc["classes"]:
        t = parse_trn(rec["representative"])
        assert canonical_form(t).hex() == rec["canonical_form"]
        assert rec["k"] == 0 and rec["order"] == 5
    assert sum(rec["labeled_count"] for rec in doc["classes"]) == 264


def test_summary_lines():
    r = census(6)
    lines = r.summary_lines()
    assert "indecomposable: 10320" in lines
    assert f"k=2 classes: {len(r.classes_with_k(2))} labeled: 2160" in lines
    assert not any(line.startswith("k=1 ") for line in lines)


def test_indecomposable_sample():
    sample = indecomposable_sample(7, 50)
    assert len(sample) == 50
    assert all(is_indecomposable(t) for t in sample)
    assert len({t.rows for t in sample}) == 50
    assert indecomposable_sample(7, 50) == sample


def test_no_minus1_at_order6_by_vertex_removal():
    # every order-6 survivor minus one vertex: the k-histogram has no 1
    r = census(6)
    for c in r.classes:
        t = c.representative
        nc = [v for v in range(6) if is_indecomposable(remove(t, v))]
        assert len(nc) == c.k != 1


@pytest.mark.slow
def test_order8_has_no_minus1():
    r = census(8, allow_large=True)
    assert r.labeled == 2**28
    # critical tournaments have odd order, and no (-1)-critical one has order 8
    assert 0 not in r.histogram and 1 not in r.histogram
