from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from tournaments.core import Tournament, apply, from_code


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", help="run the order-8 census")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)


@st.composite
def tournaments(draw, min_order=1, max_order=8):
    n = draw(st.integers(min_order, max_order))
    code = draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    return from_code(n, code)


@st.composite
def tournament_and_permutation(draw, min_order=1, max_order=8):
    t = draw(tournaments(min_order, max_order))
    p = draw(st.permutations(list(range(t.n))))
    return t, tuple(p)


def brute_isomorphic(a: Tournament, b: Tournament) -> bool:
    """Try every permutation."""
    if a.n != b.n:
        return False
    return any(apply(a, p) == b for p in permutations(range(a.n)))


def brute_intervals(t: Tournament) -> list[frozenset]:
    """Intervals straight from the definition: every pair inside X relates
    identically to every vertex outside."""
    out = []
    verts = range(t.n)
    for size in range(t.n + 1):
        for xs in combinations(verts, size):
            xs_set = set(xs)
            ok = all(
                t.arc(a, z) == t.arc(b, z)
                for a, b in combinations(xs, 2)
                for z in verts
                if z not in xs_set
            )
            if ok:
                out.append(frozenset(xs))
    return out


def brute_indecomposable(t: Tournament) -> bool:
    return all(len(x) <= 1 or len(x) == t.n for x in brute_intervals(t))
