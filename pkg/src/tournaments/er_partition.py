"""Partition of the vertices outside an indecomposable subtournament.

For ``X`` with ``|X| >= 3`` and ``T(X)`` indecomposable, every outside
vertex ``x`` falls in exactly one of

* ``[X]``   -- ``x`` dominates all of ``X`` or is dominated by all of it;
* ``X(u)``  -- ``{u, x}`` is an interval of ``T(X + x)``, for some ``u`` in ``X``;
* ``Ext(X)`` -- ``T(X + x)`` is indecomposable.

Each test is run independently and exclusivity is checked, not assumed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import Tournament, iter_bits, members, to_mask
from .errors import InvariantViolation, NotFound, PreconditionViolated
from .intervals import _indecomposable, _is_interval


@dataclass(frozen=True)
class ERPartition:
    base: frozenset[int]
    bracket: frozenset[int]
    ext: frozenset[int]
    attached: dict  # u in base -> frozenset of x with {u, x} an interval of T(X + x)

    def blocks(self) -> list[frozenset[int]]:
        return [self.bracket, self.ext] + [self.attached[u] for u in sorted(self.attached)]

    def covered(self) -> frozenset[int]:
        return frozenset().union(*self.blocks())

    def attached_to(self, x: int):
        for u, block in self.attached.items():
            if x in block:
                return u
        return None


def _base_mask(t: Tournament, base) -> int:
    mask = base if isinstance(base, int) else to_mask(base, t.n)
    if mask.bit_count() < 3:
        raise PreconditionViolated("the base set needs at least 3 vertices")
    if not _indecomposable(t.rows, mask):
        raise PreconditionViolated("T(X) must be indecomposable")
    return mask


def compute_partition(t: Tournament, base) -> ERPartition:
    rows = t.rows
    xm = _base_mask(t, base)
    bracket = ext = 0
    attached = {u: 0 for u in iter_bits(xm)}
    for x in iter_bits(t.full_mask & ~xm):
        bit = 1 << x
        hits = []
        seen = rows[x] & xm
        if seen == 0 or seen == xm:
            bracket |= bit
            hits.append("[X]")
        for u in attached:
            if _is_interval(rows, (1 << u) | bit, xm | bit):
                attached[u] |= bit
                hits.append(f"X({u})")
        if _indecomposable(rows, xm | bit):
            ext |= bit
            hits.append("Ext")
        if len(hits) != 1:
            raise InvariantViolation(f"vertex {x} classified as {hits or 'nothing'}")
    return ERPartition(
        base=members(xm),
        bracket=members(bracket),
        ext=members(ext),
        attached={u: members(m) for u, m in attached.items()},
    )


def find_indecomposable_extension_pair(t: Tournament, base) -> tuple[int, int]:
    """First pair ``(x, y)``, ``x < y`` outside ``X``, with ``T(X + {x, y})``
    indecomposable."""
    xm = _base_mask(t, base)
    if not _indecomposable(t.rows, t.full_mask):
        raise PreconditionViolated("T must be indecomposable")
    outside = list(iter_bits(t.full_mask & ~xm))
    if len(outside) < 2:
        raise PreconditionViolated("need at least two vertices outside X")
    for a, x in enumerate(outside):
        for y in outside[a + 1:]:
            if _indecomposable(t.rows, xm | 1 << x | 1 << y):
                return x, y
    raise NotFound(f"no extension pair for X = {sorted(members(xm))}")
