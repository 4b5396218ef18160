"""Isomorphism testing and canonical forms for small tournaments.

Canonical labeling uses individualization/refinement: vertices are split
into ordered cells by their out-degrees into the current cells until the
partition is stable, then the first non-singleton cell is branched on.
Every leaf of the search tree is a vertex ordering, and the canonical form
is the lexicographically smallest row-major adjacency matrix among the
leaves.  Because refinement is equivariant, the leaf set of ``T`` and of
any relabeling of ``T`` yield the same set of matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import Tournament, apply, compose, inverse, iter_bits
from .errors import DimensionMismatch, TooLarge

CANONICAL_LIMIT = 12


def _refine(rows, cells: list[int]) -> list[int]:
    while True:
        refined = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                sig = tuple((rows[v] & c).bit_count() for c in cells)
                groups[sig] = groups.get(sig, 0) | 1 << v
            refined.extend(groups[sig] for sig in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _matrix_key(rows, order: Sequence[int]) -> int:
    key = 0
    for u in order:
        row = rows[u]
        for w in order:
            key = key << 1 | (row >> w & 1)
    return key


@lru_cache(maxsize=8192)
def canonical_labeling(t: Tournament) -> tuple[int, tuple[int, ...]]:
    """``(key, p)`` with ``apply(t, p)`` the canonical representative.

    ``key`` is the row-major bit matrix of that representative read as a
    big-endian integer.  No order limit is enforced here.
    """
    rows, n = t.rows, t.n
    best: list = [None, None]

    def search(cells):
        cells = _refine(rows, cells)
        for idx, cell in enumerate(cells):
            if cell & (cell - 1):
                break
        else:
            order = [c.bit_length() - 1 for c in cells]
            key = _matrix_key(rows, order)
            if best[0] is None or key < best[0]:
                best[0], best[1] = key, order
            return
        for v in iter_bits(cell):
            search(cells[:idx] + [1 << v, cell & ~(1 << v)] + cells[idx + 1:])

    search([t.full_mask])
    perm = [0] * n
    for pos, v in enumerate(best[1]):
        perm[v] = pos
    return best[0], tuple(perm)


def _key_bytes(n: int, key: int) -> bytes:
    return bytes([n]) + key.to_bytes((n * n + 7) // 8, "big")


def canonical_form(t: Tournament) -> bytes:
    """Byte string equal for two tournaments iff they are isomorphic.

    First byte is the order; the rest is the canonical matrix, big-endian.
    Byte order agrees with lexicographic order of the matrices at fixed n.
    """
    if t.n > CANONICAL_LIMIT:
        raise TooLarge(f"canonical forms limited to n <= {CANONICAL_LIMIT}")
    return _key_bytes(t.n, canonical_labeling(t)[0])


def canonical_tournament(t: Tournament) -> Tournament:
    return apply(t, canonical_labeling(t)[1])


def from_canonical(form: bytes) -> Tournament:
    """Rebuild the canonical representative from its form."""
    n = form[0]
    key = int.from_bytes(form[1:], "big")
    rows = []
    for i in range(n):
        row = 0
        for j in range(n):
            if key >> (n * n - 1 - (i * n + j)) & 1:
                row |= 1 << j
        rows.append(row)
    return Tournament(n, tuple(rows))


def find_isomorphism(a: Tournament, b: Tournament) -> tuple[int, ...] | None:
    """Permutation ``p`` with ``apply(a, p) == b``, or ``None``."""
    if a.n != b.n or sorted(a.scores()) != sorted(b.scores()):
        return None
    key_a, pa = canonical_labeling(a)
    key_b, pb = canonical_labeling(b)
    if key_a != key_b:
        return None
    p = compose(inverse(pb), pa)
    assert apply(a, p) == b
    return p


def is_isomorphic(a: Tournament, b: Tournament) -> bool:
    return find_isomorphism(a, b) is not None


@dataclass(frozen=True)
class IsoClass:
    canonical: bytes
    count: int
    representative: Tournament


def group_classes(tournaments) -> list[IsoClass]:
    """Isomorphism classes sorted by canonical form; the representative is
    the first input member of each class."""
    tournaments = list(tournaments)
    if len({t.n for t in tournaments}) > 1:
        raise DimensionMismatch("group_classes needs tournaments of a single order")
    counts: dict[bytes, int] = {}
    reps: dict[bytes, Tournament] = {}
    for t in tournaments:
        form = canonical_form(t)
        counts[form] = counts.get(form, 0) + 1
        reps.setdefault(form, t)
    return [IsoClass(form, counts[form], reps[form]) for form in sorted(counts)]
