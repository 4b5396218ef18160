"""Exhaustive census of labeled tournaments of a fixed small order.

Labeled tournaments of order ``m`` are numbered ``0 .. 2**(m(m-1)/2) - 1``:
bit ``t`` of the code orients the ``t``-th pair ``(i, j)``, ``i < j``, in
row-major order, a set bit meaning ``i -> j``.

A shard covers a contiguous code range.  Inside it every code is filtered
for indecomposability and, for survivors, the non-critical vertices are
counted; both steps are vectorized.  Isomorphism classes are collected by
canonicalizing the first unseen survivor and marking its whole orbit as
seen, so each class is canonicalized once per shard.  Shards merge by
summing counts and taking the union of canonical forms, which makes the
result independent of the shard layout.
"""
from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _batch
from .core import Tournament, from_code, to_trn
from .errors import BadParams, InvariantViolation, TooLarge
from .isomorphism import canonical_form, from_canonical

DEFAULT_MAX_ORDER = 7
CHUNK = 1 << 20


def labeled_count(m: int) -> int:
    return 1 << (m * (m - 1) // 2)


def _check_order(m: int, allow_large: bool):
    if m < 1:
        raise BadParams(f"order must be >= 1, got {m}")
    limit = _batch.MAX_BATCH_ORDER if allow_large else DEFAULT_MAX_ORDER
    if m > limit:
        hint = "" if allow_large or m > _batch.MAX_BATCH_ORDER else " (order 8 needs allow_large)"
        raise TooLarge(f"census limited to order <= {limit}{hint}")


def enumerate_labeled(m: int, visitor, start: int = 0, stop: int | None = None) -> int:
    """Call ``visitor(code, tournament)`` for every code in ``[start, stop)``.

    Returns the number of visits.
    """
    if m > _batch.MAX_BATCH_ORDER:
        raise TooLarge(f"labeled enumeration limited to order <= {_batch.MAX_BATCH_ORDER}")
    total = labeled_count(m)
    stop = total if stop is None else stop
    if not 0 <= start <= stop <= total:
        raise BadParams(f"range [{start}, {stop}) outside [0, {total})")
    for code in range(start, stop):
        visitor(code, from_code(m, code))
    return stop - start


def shard_ranges(total: int, shards: int) -> list[tuple[int, int]]:
    shards = max(1, min(shards, total))
    bounds = [total * s // shards for s in range(shards + 1)]
    return list(zip(bounds[:-1], bounds[1:]))


@dataclass
class ShardResult:
    order: int
    start: int
    stop: int
    visited: int = 0
    checksum: int = 0  # sum of visited codes
    indecomposable: int = 0
    histogram: Counter = field(default_factory=Counter)
    classes: dict = field(default_factory=dict)  # canonical form -> [k, labeled count in shard]


def census_shard(m: int, start: int, stop: int, relabel=None, chunk: int = CHUNK) -> ShardResult:
    """Census of the codes in ``[start, stop)``.

    With ``relabel`` every visited tournament is replaced by
    ``apply(T, relabel)`` before analysis.
    """
    res = ShardResult(m, start, stop)
    seen = bytearray(stop - start)
    seen_np = np.frombuffer(seen, dtype=np.uint8)
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        codes = np.arange(lo, hi, dtype=np.uint64)
        res.visited += codes.size
        res.checksum += (lo + hi - 1) * (hi - lo) // 2
        work = codes if relabel is None else _batch.permute_codes(m, codes, relabel)
        rows = _batch.code_rows(m, work)
        keep = ~_batch.decomposable(rows, m)
        survivors, rows = codes[keep], rows[keep]
        res.indecomposable += int(survivors.size)
        ks = _batch.popcount(_batch.non_critical_masks(rows, m))
        res.histogram.update(Counter(ks.tolist()))
        for idx, code in enumerate(survivors.tolist()):
            if seen[code - start]:
                continue
            t = Tournament(m, tuple(int(r) for r in rows[idx]))
            orbit = _batch.orbit_codes(m, t.rows)
            inside = orbit[(orbit >= start) & (orbit < stop)].astype(np.int64) - start
            seen_np[inside] = 1
            form = canonical_form(t)
            if form in res.classes:
                raise InvariantViolation("isomorphism class met twice in one shard")
            res.classes[form] = [int(ks[idx]), int(inside.size)]
    return res


@dataclass(frozen=True)
class ClassRecord:
    order: int
    k: int
    canonical: bytes
    labeled_count: int

    @property
    def representative(self) -> Tournament:
        return from_canonical(self.canonical)


@dataclass
class CensusResult:
    order: int
    labeled: int
    indecomposable: int
    histogram: dict  # k -> labeled count of indecomposable tournaments with k non-critical vertices
    classes: list  # ClassRecord sorted by (k, canonical form)
    checksum: int = 0

    @property
    def small_order(self) -> bool:
        return self.order < 5

    def classes_with_k(self, k: int) -> list[ClassRecord]:
        return [c for c in self.classes if c.k == k]

    def forms_with_k(self, k: int) -> set[bytes]:
        return {c.canonical for c in self.classes_with_k(k)}

    def summary_lines(self) -> list[str]:
        lines = [
            f"order: {self.order}",
            f"labeled: {self.labeled}",
            f"indecomposable: {self.indecomposable}",
            f"indecomposable classes: {len(self.classes)}",
        ]
        if self.small_order:
            lines.append("note: order < 5, criticality follows the n <= 2 convention only")
        for k in sorted(self.histogram):
            lines.append(
                f"k={k} classes: {len(self.classes_with_k(k))} labeled: {self.histogram[k]}"
            )
        return lines

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "labeled": self.labeled,
            "indecomposable": self.indecomposable,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "classes": [
                {
                    "order": c.order,
                    "k": c.k,
                    "canonical_form": c.canonical.hex(),
                    "labeled_count": c.labeled_count,
                    "representative": to_trn(c.representative),
                }
                for c in self.classes
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def merge_shards(m: int, parts: list[ShardResult]) -> CensusResult:
    parts = sorted(parts, key=lambda p: p.start)
    total = labeled_count(m)
    if (
        parts[0].start != 0
        or parts[-1].stop != total
        or any(a.stop != b.start for a, b in zip(parts, parts[1:]))
    ):
        raise InvariantViolation("shards do not tile the code range")
    visited = sum(p.visited for p in parts)
    checksum = sum(p.checksum for p in parts)
    if visited != total or checksum != total * (total - 1) // 2:
        raise InvariantViolation(f"visited {visited} codes, expected {total}")
    histogram: Counter = Counter()
    classes: dict[bytes, list[int]] = {}
    for p in parts:
        histogram.update(p.histogram)
        for form, (k, count) in p.classes.items():
            entry = classes.setdefault(form, [k, 0])
            if entry[0] != k:
                raise InvariantViolation("one isomorphism class with two different k")
            entry[1] += count
    indecomposable = sum(p.indecomposable for p in parts)
    if sum(histogram.values()) != indecomposable:
        raise InvariantViolation("histogram mass differs from indecomposable count")
    per_k = Counter()
    for k, count in classes.values():
        per_k[k] += count
    if per_k != histogram:
        raise InvariantViolation("class orbit sizes disagree with the labeled histogram")
    records = sorted(
        (ClassRecord(m, k, form, count) for form, (k, count) in classes.items()),
        key=lambda c: (c.k, c.canonical),
    )
    return CensusResult(m, visited, indecomposable, dict(sorted(histogram.items())), records, checksum)


def census(m: int, jobs: int = 1, shards: int | None = None, allow_large: bool = False,
           relabel=None) -> CensusResult:
    """Full census of order ``m`` (``m <= 7``, or 8 with ``allow_large``)."""
    _check_order(m, allow_large)
    ranges = shard_ranges(labeled_count(m), shards or jobs)
    if jobs > 1 and len(ranges) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(census_shard, [m] * len(ranges), *zip(*ranges),
                                  [relabel] * len(ranges)))
    else:
        parts = [census_shard(m, lo, hi, relabel) for lo, hi in ranges]
    return merge_shards(m, parts)


_MEMO: dict[int, CensusResult] = {}


def cached_census(m: int, jobs: int = 1) -> CensusResult:
    """Census memoized per order; ``jobs`` only affects the first call."""
    if m not in _MEMO:
        _MEMO[m] = census(m, jobs=jobs)
    return _MEMO[m]


def indecomposable_sample(m: int, count: int, stride: int = 40503) -> list[Tournament]:
    """First ``count`` indecomposable tournaments along the code walk
    ``i * stride mod 2**(m(m-1)/2)``; ``stride`` must be odd so the walk
    visits every code."""
    total = labeled_count(m)
    out: list[Tournament] = []
    start = 0
    while len(out) < count and start < total:
        idx = np.arange(start, min(start + 4 * count, total), dtype=np.uint64)
        codes = (idx * np.uint64(stride)) % np.uint64(total)
        rows = _batch.code_rows(m, codes)
        keep = ~_batch.decomposable(rows, m)
        out.extend(Tournament(m, tuple(int(r) for r in row)) for row in rows[keep])
        start += idx.size
    return out[:count]


__all__ = [
    "CensusResult",
    "ClassRecord",
    "ShardResult",
    "cached_census",
    "census",
    "census_shard",
    "enumerate_labeled",
    "indecomposable_sample",
    "labeled_count",
    "merge_shards",
    "shard_ranges",
]
