"""Intervals (modules), indecomposability and arc equivalence.

The private ``_``-prefixed helpers work on raw out-neighbourhood rows and a
``universe`` bitmask, which lets callers test subtournaments such as
``T - x`` or ``T(X + {x})`` without relabeling.
"""
from __future__ import annotations

from .core import Tournament, iter_bits, members, to_mask
from .errors import DegeneratePair, OutOfRange, TooLarge

ENUMERATION_LIMIT = 20


def _is_interval(rows, x: int, universe: int) -> bool:
    for z in iter_bits(universe & ~x):
        hit = rows[z] & x
        if hit and hit != x:
            return False
    return True


def _closure(rows, seed: int, universe: int) -> int:
    x = seed
    changed = True
    while changed:
        changed = False
        for z in iter_bits(universe & ~x):
            hit = rows[z] & x
            if hit and hit != x:
                x |= 1 << z
                changed = True
    return x


def _find_interval(rows, universe: int) -> int | None:
    """Closure of the lexicographically first pair whose closure is proper."""
    verts = list(iter_bits(universe))
    for a, x in enumerate(verts):
        for y in verts[a + 1:]:
            c = _closure(rows, (1 << x) | (1 << y), universe)
            if c != universe:
                return c
    return None


def _indecomposable(rows, universe: int) -> bool:
    return _find_interval(rows, universe) is None


def arcs_equivalent(t: Tournament, first: tuple[int, int], second: tuple[int, int]) -> bool:
    """``(x, y) == (u, v)`` as couples, or both arcs of ``t``, or neither."""
    for a, b in (first, second):
        if a == b:
            raise DegeneratePair(f"couple ({a}, {b}) is not a pair of distinct vertices")
        if not (0 <= a < t.n and 0 <= b < t.n):
            raise OutOfRange(f"couple ({a}, {b}) outside 0..{t.n - 1}")
    if tuple(first) == tuple(second):
        return True
    return t.arc(*first) == t.arc(*second)


def is_interval(t: Tournament, vertices) -> bool:
    return _is_interval(t.rows, to_mask(vertices, t.n), t.full_mask)


def is_trivial(vertices, n: int) -> bool:
    size = len(vertices)
    return size <= 1 or size == n


def interval_closure(t: Tournament, seed) -> frozenset[int]:
    """Smallest interval of ``t`` containing ``seed``.

    Any vertex outside the current set that splits it must belong to every
    interval containing it, so it is absorbed until nothing splits the set.
    """
    return members(_closure(t.rows, to_mask(seed, t.n), t.full_mask))


def find_nontrivial_interval(t: Tournament) -> frozenset[int] | None:
    """Some interval ``X`` with ``2 <= |X| <= n-1``, or ``None``.

    Pairs are scanned in lexicographic order and the first proper closure
    is returned, so the witness is deterministic.
    """
    found = _find_interval(t.rows, t.full_mask)
    return None if found is None else members(found)


def is_indecomposable(t: Tournament) -> bool:
    """All intervals trivial.  Orders 1 and 2 count as indecomposable."""
    return _indecomposable(t.rows, t.full_mask)


def enumerate_intervals(t: Tournament) -> list[frozenset[int]]:
    """Every interval, trivial ones included, by brute-force subset scan."""
    if t.n > ENUMERATION_LIMIT:
        raise TooLarge(f"subset scan limited to n <= {ENUMERATION_LIMIT}")
    rows, full = t.rows, t.full_mask
    return [members(x) for x in range(full + 1) if _is_interval(rows, x, full)]
