import pytest
from hypothesis import given

from tournaments.core import dual, remove
from tournaments.criticality import (
    CYCLE,
    ISOLATED,
    OTHER,
    PATH,
    classify,
    component_shapes,
    critical_vertices,
    graph_from_edges,
    graph_to_dot,
    indecomposability_graph,
)
from tournaments.errors import NotIndecomposable
from tournaments.families import (
    chain,
    e_family,
    f_family,
    g_family,
    h_family,
    minus1_specs,
    t_family,
    u_family,
    v_family,
)
from tournaments.intervals import is_indecomposable

from .conftest import brute_indecomposable, tournaments


def path_edges(m):
    return {frozenset((i, i + 1)) for i in range(m - 1)}


def test_critical_vertices_examples():
    assert critical_vertices(u_family(2)) == set(range(5))
    assert critical_vertices(e_family(3, 1)) == set(range(7)) - {3}
    assert critical_vertices(t_family(1)) == frozenset()
    with pytest.raises(NotIndecomposable):
        critical_vertices(chain(4))


def test_classify_examples():
    assert classify(v_family(3)).k == 0
    assert classify(v_family(3)).is_critical
    g = classify(g_family(4, 1))
    assert g.k == 1 and g.non_critical == {3} and g.is_minus1_critical
    h = classify(h_family(3, 1))
    assert h.non_critical == {3}
    with pytest.raises(NotIndecomposable):
        classify(chain(5))


def test_small_orders_flagged():
    r = classify(t_family(1))
    assert r.small_order and not r.is_critical
    assert r.critical | r.non_critical == {0, 1, 2}


def test_graph_examples():
    assert indecomposability_graph(e_family(3, 1)).edges == path_edges(7)
    assert indecomposability_graph(f_family(3, 1)).edges == path_edges(7)
    assert indecomposability_graph(g_family(3, 1)).edges == path_edges(7) - {frozenset((5, 6))}
    # corrected reading of the H edit: P_7 - {5,6} - {1,2} - {2,3} + {1,3}
    assert indecomposability_graph(h_family(3, 1)).edges == {
        frozenset(e) for e in ((0, 1), (1, 3), (3, 4), (4, 5))
    }


def test_shapes_examples():
    e = component_shapes(indecomposability_graph(e_family(3, 1)))
    assert e == [(frozenset(range(7)), PATH)]
    g = component_shapes(indecomposability_graph(g_family(3, 1)))
    assert g == [(frozenset(range(6)), PATH), (frozenset({6}), ISOLATED)]
    empty = component_shapes(graph_from_edges(4, []))
    assert empty == [(frozenset({i}), ISOLATED) for i in range(4)]


def test_shape_tags():
    cycle = graph_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert component_shapes(cycle) == [(frozenset(range(4)), CYCLE)]
    star = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert component_shapes(star) == [(frozenset(range(4)), OTHER)]
    pair = graph_from_edges(3, [(1, 2)])
    assert component_shapes(pair) == [(frozenset({0}), ISOLATED), (frozenset({1, 2}), PATH)]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_isolated_counts(n):
    want = {"E": 0, "F": 0, "G": 1, "H": 2}
    for spec in minus1_specs(n):
        g = indecomposability_graph(spec.build())
        assert len(g.isolated()) == want[spec.tag[0]], spec.label


@given(tournaments(min_order=3, max_order=7))
def test_graph_definition(t):
    g = indecomposability_graph(t)
    for x in range(t.n):
        for y in range(x + 1, t.n):
            assert (frozenset((x, y)) in g.edges) == brute_indecomposable(remove(t, x, y))


@given(tournaments(max_order=8))
def test_dual_shares_criticality(t):
    assert indecomposability_graph(t) == indecomposability_graph(dual(t))
    if is_indecomposable(t):
        assert classify(t).non_critical == classify(dual(t)).non_critical


def test_graph_dot_marks_non_critical():
    r = classify(e_family(3, 1))
    dot = graph_to_dot(r.graph, r.non_critical)
    assert dot.startswith("graph I {")
    assert "3 [shape=doublecircle" in dot
    assert "  0 -- 1;" in dot
