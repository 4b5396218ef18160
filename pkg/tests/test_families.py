import pytest

from tournaments.core import apply, dual, induced, out_set, in_set
from tournaments.criticality import classify
from tournaments.errors import BadParams
from tournaments.families import (
    FamilySpec,
    all_minus1_members,
    build,
    chain,
    dual_isomorphism,
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
from tournaments.isomorphism import is_isomorphic


def cross_out_to_in(t, k):
    a = 2 * k + 1
    return {(x, y) for x in range(a + 1, t.n) for y in range(a) if t.arc(x, y)}


def test_chain():
    assert chain(3).arcs() == [(0, 1), (0, 2), (1, 2)]
    assert chain(1).n == 1


def test_order_three_coincide():
    assert t_family(1) == u_family(1) == v_family(1)
    assert t_family(1).arcs() == [(0, 1), (1, 2), (2, 0)]


def test_t_family():
    assert out_set(t_family(2), 0) == {1, 2}
    t = t_family(4)
    for i in range(9):
        assert out_set(t, i) == {(i + d) % 9 for d in range(1, 5)}


def test_u_family_even_arcs():
    u = u_family(2)
    evens = {(i, j) for i, j in u.arcs() if i % 2 == 0 and j % 2 == 0}
    assert evens == {(2, 0), (4, 0), (4, 2)}


def test_v_family():
    v = v_family(2)
    assert out_set(v, 4) == {0, 2} and in_set(v, 4) == {1, 3}
    assert induced(v, range(4)) == chain(4)


def test_e_cross_arcs():
    assert cross_out_to_in(e_family(3, 1), 1) == {(4, 0), (4, 2), (6, 0), (6, 2)}


def test_f_inside_is_u():
    f = f_family(3, 1)
    assert induced(f, {0, 1, 2}) == u_family(1)
    assert f.arc(2, 0)
    assert cross_out_to_in(f, 1) == {(4, 0), (4, 2), (6, 0), (6, 2)}


def test_g_outside_and_cross():
    g = g_family(3, 1)
    assert g.arc(4, 5) and g.arc(6, 4) and g.arc(5, 6)
    assert cross_out_to_in(g, 1) == {(6, 0), (6, 2)}
    g2 = g_family(5, 1)
    assert out_set(g2, 10) & set(range(4, 10)) == {4, 6, 8}


def test_h_single_cross_arc():
    assert cross_out_to_in(h_family(3, 1), 1) == {(6, 2)}
    assert cross_out_to_in(h_family(5, 2), 2) == {(10, 4)}


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_substructures(n):
    for k in range(1, n - 1):
        inside, outside = range(2 * k + 1), range(2 * k + 2, 2 * n + 1)
        assert induced(e_family(n, k), inside) == chain(2 * k + 1)
        assert induced(e_family(n, k), outside) == chain(2 * n - 2 * k - 1)
        assert is_isomorphic(induced(f_family(n, k), inside), u_family(k))
        assert is_isomorphic(induced(h_family(n, k), inside), v_family(k))
        for fam in (g_family, h_family):
            assert is_isomorphic(induced(fam(n, k), outside), v_family(n - k - 1))


@pytest.mark.parametrize("n", [3, 4])
def test_g_reading_gives_u_on_small_member(n):
    # with n = k+2 the family member minus {2k+1, 2k+2} is U of order 2k+3
    k = n - 2
    g = g_family(n, k)
    rest = [v for v in range(g.n) if v not in (2 * k + 1, 2 * k + 2)]
    assert is_isomorphic(induced(g, rest), u_family(k + 1))


@pytest.mark.parametrize("n, k", [(2, 1), (3, 0), (3, 2), (5, 4), (4, -1)])
def test_bad_params(n, k):
    for fam in (e_family, f_family, g_family, h_family):
        with pytest.raises(BadParams):
            fam(n, k)
    with pytest.raises(BadParams):
        dual_isomorphism("E", n, k)


def test_bad_orders():
    for fam in (t_family, u_family, v_family):
        with pytest.raises(BadParams):
            fam(0)
    with pytest.raises(BadParams):
        chain(0)


def test_dual_isomorphism_examples():
    assert dual_isomorphism("E", 3, 1) == (6, 5, 4, 3, 2, 1, 0)
    e = e_family(3, 1)
    assert apply(dual(e), dual_isomorphism("E", 3, 1)) == e
    sigma = dual_isomorphism("H", 3, 1)
    assert sigma[2] == 6 and sigma[3] == 3 and sigma[6] == 2
    assert all(sigma[q] == 5 - q for q in (0, 1, 4, 5))
    assert apply(dual(h_family(3, 1)), sigma) == h_family(3, 1)
    with pytest.raises(BadParams):
        dual_isomorphism("F", 3, 1)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_dual_isomorphisms_map_onto_partner(n):
    for tag in ("E", "H"):
        for k in range(1, n - 1):
            sigma = dual_isomorphism(tag, n, k)
            assert apply(dual(build(tag, n, k)), sigma) == build(tag, n, n - k - 1)


def test_family_spec_labels_and_order():
    specs = minus1_specs(4)
    assert [s.label for s in specs[:6]] == ["E_9^3", "F_9^3", "F_9^3*", "G_9^3", "G_9^3*", "H_9^3"]
    assert [s.k for s in specs] == [1] * 6 + [2] * 6
    assert FamilySpec("Fdual", 3, 1).build() == dual(f_family(3, 1))
    assert build("L", 4) == chain(4)
    assert build("V", 2) == v_family(2)
    with pytest.raises(BadParams):
        build("E", 3)
    with pytest.raises(BadParams):
        build("X", 3, 1)


@pytest.mark.parametrize("n, count", [(3, 6), (4, 12), (5, 18), (6, 24)])
def test_member_count(n, count):
    members = all_minus1_members(n)
    assert len(members) == count == 3 * (2 * n + 1) - 15
    assert all(t.n == 2 * n + 1 for t in members)


@pytest.mark.parametrize(
    "fam, n, k",
    [(e_family, 3, 1), (f_family, 4, 2), (g_family, 4, 1), (h_family, 3, 1), (h_family, 5, 2)],
)
def test_unique_non_critical_vertex(fam, n, k):
    r = classify(fam(n, k))
    assert r.k == 1 and r.non_critical == {2 * k + 1}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_critical_families(n):
    for fam in (t_family, u_family, v_family):
        t = fam(n)
        assert is_indecomposable(t)
        assert classify(t).k == 0
