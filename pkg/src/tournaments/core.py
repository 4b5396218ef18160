"""Tournament representation, relabeling, duality and the ``.trn`` text format.

A tournament on ``n`` vertices is stored as ``n`` out-neighbourhood bitmasks:
bit ``j`` of ``rows[i]`` is set iff the arc ``i -> j`` is present.  Vertex
sets cross the public API as ``frozenset`` objects and are converted to
bitmasks internally (see :func:`to_mask` / :func:`members`).
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    DimensionMismatch,
    NotABijection,
    NotATournament,
    OutOfRange,
    ParseError,
    TooLarge,
)

MAX_ORDER = 64
TRN_HEADER = "trn 1"

VertexSet = frozenset
Permutation = tuple


def to_mask(vertices: Iterable[int], n: int) -> int:
    """Bitmask of ``vertices``; every member must lie in ``range(n)``."""
    mask = 0
    for v in vertices:
        if not 0 <= v < n:
            raise OutOfRange(f"vertex {v} outside 0..{n - 1}")
        mask |= 1 << v
    return mask


def members(mask: int) -> frozenset[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return frozenset(out)


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Tournament:
    """Immutable tournament on the vertex set ``{0, ..., n-1}``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_ORDER:
            raise TooLarge(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.rows) != self.n:
            raise DimensionMismatch(f"{len(self.rows)} rows for order {self.n}")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise OutOfRange(f"row {i} has bits beyond vertex {self.n - 1}")
            if row >> i & 1:
                raise NotATournament(f"loop at vertex {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] >> j & 1) == (self.rows[j] >> i & 1):
                    raise NotATournament(f"vertices {i} and {j} need exactly one arc")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def arc(self, i: int, j: int) -> bool:
        """True iff ``i`` dominates ``j``."""
        return bool(self.rows[i] >> j & 1)

    def matrix(self) -> list[list[bool]]:
        return [[bool(row >> j & 1) for j in range(self.n)] for row in self.rows]

    def scores(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def arcs(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in iter_bits(self.rows[i])]

    def __repr__(self):
        return f"Tournament(n={self.n}, arcs={self.arcs()})"


def from_matrix(rows: Sequence[Sequence]) -> Tournament:
    """Build a tournament from a square boolean (or 0/1) matrix."""
    rows = [list(r) for r in rows]
    n = len(rows)
    if n == 0:
        raise DimensionMismatch("empty matrix")
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("matrix is not square")
    masks = []
    for r in rows:
        mask = 0
        for j, entry in enumerate(r):
            if entry:
                mask |= 1 << j
        masks.append(mask)
    return Tournament(n, tuple(masks))


def from_arcs(n: int, arcs: Iterable[tuple[int, int]]) -> Tournament:
    rows = [0] * n
    for i, j in arcs:
        if not (0 <= i < n and 0 <= j < n):
            raise OutOfRange(f"arc ({i}, {j}) outside 0..{n - 1}")
        rows[i] |= 1 << j
    return Tournament(n, tuple(rows))


def from_dominance(n: int, dominates) -> Tournament:
    """Build from a predicate ``dominates(i, j)`` evaluated for ``i != j``."""
    rows = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and dominates(i, j):
                rows[i] |= 1 << j
    return Tournament(n, tuple(rows))


def dual(t: Tournament) -> Tournament:
    """Reverse every arc."""
    full = t.full_mask
    return Tournament(t.n, tuple(full & ~row & ~(1 << i) for i, row in enumerate(t.rows)))


def _check_vertex(t: Tournament, v: int):
    if not 0 <= v < t.n:
        raise OutOfRange(f"vertex {v} outside 0..{t.n - 1}")


def out_set(t: Tournament, v: int) -> frozenset[int]:
    _check_vertex(t, v)
    return members(t.rows[v])


def in_set(t: Tournament, v: int) -> frozenset[int]:
    _check_vertex(t, v)
    return members(t.full_mask & ~t.rows[v] & ~(1 << v))


def induced_with_labels(t: Tournament, vertices) -> tuple[Tournament, tuple[int, ...]]:
    """Subtournament on ``vertices`` plus the map new label -> original label.

    New labels follow the increasing order of the original ones.  ``vertices``
    may be an iterable of vertices or an int bitmask.
    """
    mask = vertices if isinstance(vertices, int) else to_mask(vertices, t.n)
    if mask & ~t.full_mask:
        raise OutOfRange("vertex set has members outside the tournament")
    labels = tuple(sorted(iter_bits(mask)))
    if not labels:
        raise DimensionMismatch("cannot induce on the empty set")
    rows = []
    for old in labels:
        row = t.rows[old]
        rows.append(sum(1 << new for new, other in enumerate(labels) if row >> other & 1))
    return Tournament(len(labels), tuple(rows)), labels


def induced(t: Tournament, vertices) -> Tournament:
    return induced_with_labels(t, vertices)[0]


def remove(t: Tournament, *vertices: int) -> Tournament:
    """``T - {v, ...}`` relabeled to ``0..n-k-1``."""
    return induced(t, t.full_mask & ~to_mask(vertices, t.n))


def check_permutation(p: Sequence[int], n: int) -> tuple[int, ...]:
    p = tuple(p)
    if len(p) != n or sorted(p) != list(range(n)):
        raise NotABijection(f"{p} is not a permutation of 0..{n - 1}")
    return p


def apply(t: Tournament, p: Sequence[int]) -> Tournament:
    """Transport ``t`` along ``p``: the result has ``p[i] -> p[j]`` iff ``i -> j``."""
    p = check_permutation(p, t.n)
    rows = [0] * t.n
    for i, row in enumerate(t.rows):
        image = 0
        for j in iter_bits(row):
            image |= 1 << p[j]
        rows[p[i]] = image
    return Tournament(t.n, tuple(rows))


def compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """``p o q``: first ``q``, then ``p``."""
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


# Labeled enumeration codes: bit t <-> t-th pair (i, j), i < j, in row-major
# order; a set bit means i -> j.

def pair_index(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def from_code(n: int, code: int) -> Tournament:
    rows = [0] * n
    for t, (i, j) in enumerate(pair_index(n)):
        if code >> t & 1:
            rows[i] |= 1 << j
        else:
            rows[j] |= 1 << i
    return Tournament(n, tuple(rows))


def to_code(t: Tournament) -> int:
    code = 0
    for idx, (i, j) in enumerate(pair_index(t.n)):
        if t.rows[i] >> j & 1:
            code |= 1 << idx
    return code


# .trn text format

def to_trn(t: Tournament) -> str:
    lines = [TRN_HEADER, str(t.n)]
    for row in t.rows:
        lines.append("".join("1" if row >> j & 1 else "0" for j in range(t.n)))
    return "\n".join(lines) + "\n"


def parse_trn(text: str) -> Tournament:
    lines = text.splitlines()
    if not lines or lines[0].strip() != TRN_HEADER:
        raise ParseError(f"missing '{TRN_HEADER}' header")
    if len(lines) < 2:
        raise ParseError("missing order line")
    try:
        n = int(lines[1].strip())
    except ValueError:
        raise ParseError(f"bad order line {lines[1]!r}") from None
    if not 1 <= n <= MAX_ORDER:
        raise ParseError(f"order {n} outside 1..{MAX_ORDER}")
    body = lines[2:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != n:
        raise ParseError(f"expected {n} matrix rows, found {len(body)}")
    matrix = []
    for i, line in enumerate(body):
        line = line.strip()
        if len(line) != n or set(line) - {"0", "1"}:
            raise ParseError(f"row {i} must be {n} characters of 0/1, got {line!r}")
        matrix.append([c == "1" for c in line])
    try:
        return from_matrix(matrix)
    except (NotATournament, DimensionMismatch) as exc:
        raise ParseError(str(exc)) from exc


def write_trn(t: Tournament, path) -> None:
    Path(path).write_text(to_trn(t))


def read_trn(path) -> Tournament:
    return parse_trn(Path(path).read_text())


def to_dot(t: Tournament, name: str = "T") -> str:
    lines = [f"digraph {name} {{"]
    lines += [f"  {v};" for v in range(t.n)]
    lines += [f"  {i} -> {j};" for i, j in t.arcs()]
    lines.append("}")
    return "\n".join(lines) + "\n"
