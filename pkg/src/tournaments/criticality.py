"""Critical vertices, (-k)-criticality and the indecomposability graph."""
from __future__ import annotations

from dataclasses import dataclass

from .core import Tournament, iter_bits, members
from .errors import NotIndecomposable
from .intervals import _indecomposable

ISOLATED, PATH, CYCLE, OTHER = "isolated", "path", "cycle", "other"


@dataclass(frozen=True)
class IndecomposabilityGraph:
    """Undirected graph on ``0..n-1``; ``{x, y}`` is an edge iff ``T - {x, y}``
    is indecomposable."""

    n: int
    edges: frozenset[frozenset[int]]

    def neighbours(self, v: int) -> frozenset[int]:
        return frozenset(u for e in self.edges if v in e for u in e if u != v)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def isolated(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.degree(v) == 0)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(tuple(sorted(e)) for e in self.edges)


def graph_from_edges(n: int, edges) -> IndecomposabilityGraph:
    return IndecomposabilityGraph(n, frozenset(frozenset(e) for e in edges))


@dataclass(frozen=True)
class CriticalityReport:
    n: int
    critical: frozenset[int]
    non_critical: frozenset[int]
    graph: IndecomposabilityGraph
    components: tuple[tuple[frozenset[int], str], ...]

    @property
    def k(self) -> int:
        return len(self.non_critical)

    @property
    def small_order(self) -> bool:
        """Orders below 5 only get criticality through the n <= 2 convention."""
        return self.n < 5

    @property
    def is_critical(self) -> bool:
        return self.k == 0 and not self.small_order

    @property
    def is_minus1_critical(self) -> bool:
        return self.k == 1


def _require_indecomposable(t: Tournament):
    if not _indecomposable(t.rows, t.full_mask):
        raise NotIndecomposable("criticality is only defined for indecomposable tournaments")


def _non_critical_mask(t: Tournament) -> int:
    full = t.full_mask
    return sum(1 << x for x in range(t.n) if _indecomposable(t.rows, full & ~(1 << x)))


def critical_vertices(t: Tournament) -> frozenset[int]:
    """Vertices ``x`` with ``T - x`` decomposable."""
    _require_indecomposable(t)
    return members(t.full_mask & ~_non_critical_mask(t))


def indecomposability_graph(t: Tournament) -> IndecomposabilityGraph:
    full = t.full_mask
    edges = [
        (x, y)
        for x in range(t.n)
        for y in range(x + 1, t.n)
        if _indecomposable(t.rows, full & ~(1 << x) & ~(1 << y))
    ]
    return graph_from_edges(t.n, edges)


def component_shapes(g: IndecomposabilityGraph) -> list[tuple[frozenset[int], str]]:
    """Connected components in order of their smallest vertex, each tagged
    isolated, path, cycle or other."""
    adj = [0] * g.n
    for e in g.edges:
        x, y = tuple(e)
        adj[x] |= 1 << y
        adj[y] |= 1 << x
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        verts = list(iter_bits(comp))
        degrees = [adj[v].bit_count() for v in verts]
        n_edges = sum(degrees) // 2
        if len(verts) == 1:
            shape = ISOLATED
        elif n_edges == len(verts) - 1 and max(degrees) <= 2:
            shape = PATH
        elif len(verts) >= 3 and all(d == 2 for d in degrees):
            shape = CYCLE
        else:
            shape = OTHER
        out.append((frozenset(verts), shape))
    return out


def classify(t: Tournament) -> CriticalityReport:
    _require_indecomposable(t)
    non_critical = members(_non_critical_mask(t))
    graph = indecomposability_graph(t)
    return CriticalityReport(
        n=t.n,
        critical=frozenset(range(t.n)) - non_critical,
        non_critical=non_critical,
        graph=graph,
        components=tuple(component_shapes(graph)),
    )


def graph_to_dot(g: IndecomposabilityGraph, non_critical=(), name: str = "I") -> str:
    """Undirected DOT; non-critical vertices are drawn as filled double circles."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        if v in non_critical:
            lines.append(f'  {v} [shape=doublecircle, style=filled, fillcolor="lightgrey"];')
        else:
            lines.append(f"  {v};")
    lines += [f"  {x} -- {y};" for x, y in g.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
