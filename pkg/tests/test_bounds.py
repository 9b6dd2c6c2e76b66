import itertools
import math
from fractions import Fraction

import pytest

from conftest import perms
from ulamcodes.bounds import (
    DomainError,
    bollobas_bound,
    bounds_report,
    build_graph,
    confusable_ball_bound,
    gabrys_log2,
    gabrys_size,
    greedy_independent_set,
    gv_lower,
    sphere_upper,
    triangle_count,
)
from ulamcodes.deletion import confusable, verify_deletion_code
from ulamcodes.metrics import lcs_length


def test_gv_lower():
    assert gv_lower(5, 1) == 5
    assert gv_lower(6, 1) == 20
    assert gv_lower(6, 0) == 720


def test_sphere_upper():
    assert sphere_upper(5, 1) == 24
    assert sphere_upper(6, 2) == 24
    assert sphere_upper(5, 0) == 120


def test_gabrys():
    assert gabrys_size(8, 2) == 45360
    assert gabrys_size(16, 2) == Fraction(math.factorial(16) * 17, 16)
    assert gabrys_log2(8, 2) == pytest.approx(math.log2(45360))
    assert gabrys_log2(5, 1) is not None
    assert gabrys_log2(5, 3) is None
    with pytest.raises(DomainError):
        gabrys_size(5, 1)
    with pytest.raises(DomainError):
        gabrys_size(5, 4)


def test_bollobas():
    # log2(1) = 0 leaves only the -1/2 log2(T/V) term
    assert bollobas_bound(100, 1, 400) == pytest.approx(10 * (-0.5 * 2))
    assert bollobas_bound(100, 1, 400) <= 0
    a = bollobas_bound(100, 8, 50)
    b = bollobas_bound(200, 8, 100)
    assert b == pytest.approx(2 * a)
    assert bollobas_bound(100, 4, 0) == bollobas_bound(100, 4, 1)


def brute_graph(n, t):
    ps = perms(n)
    return ps, {(a, b) for a, b in itertools.permutations(ps, 2) if lcs_length(a, b) >= n - t}


def test_g31():
    g = build_graph(3, 1)
    assert g.V == 6
    assert g.max_degree == 4
    assert g.edge_count == 12
    # frozen from brute-force triple enumeration with LCS adjacency
    assert triangle_count(g) == 8
    ps, edges = brute_graph(3, 1)
    brute = sum(1 for a, b, c in itertools.combinations(ps, 3) if {(a, b), (b, c), (a, c)} <= edges)
    assert triangle_count(g) == brute
    ordered = sum(1 for a, b, c in itertools.permutations(ps, 3) if {(a, b), (b, c), (a, c)} <= edges)
    assert ordered == 6 * brute


@pytest.mark.parametrize("n", [3, 4, 5])
def test_g_n0_has_no_edges(n):
    g = build_graph(n, 0)
    assert g.edge_count == 0 and triangle_count(g) == 0
    assert len(greedy_independent_set(g)) == math.factorial(n)


@pytest.mark.parametrize("n,t", [(3, 1), (4, 1), (4, 2), (5, 1), (5, 2)])
def test_edges_match_lcs_and_confusability(n, t):
    g = build_graph(n, t)
    ps, edges = brute_graph(n, t)
    for u, a in enumerate(g.vertices):
        for v, b in enumerate(g.vertices):
            if u == v:
                assert not g.has_edge(u, v)
                continue
            e = g.has_edge(u, v)
            assert e == ((a, b) in edges)
            assert e == g.has_edge(v, u)
            if n <= 4:
                assert e == confusable(a, b, t)


@pytest.mark.parametrize("n,t", [(4, 1), (4, 2), (5, 1), (5, 2), (6, 1), (6, 2)])
def test_degree_bound_and_greedy_sandwich(n, t):
    g = build_graph(n, t)
    assert g.max_degree <= confusable_ball_bound(n, t)
    chosen = greedy_independent_set(g)
    assert gv_lower(n, t) <= len(chosen) <= sphere_upper(n, t)
    assert verify_deletion_code(chosen, t)


def test_triangle_count_matches_bruteforce_g41():
    g = build_graph(4, 1)
    brute = sum(
        1 for u, v, w in itertools.combinations(range(g.V), 3) if g.has_edge(u, v) and g.has_edge(v, w) and g.has_edge(u, w)
    )
    assert triangle_count(g) == brute


@pytest.mark.parametrize("n", range(3, 12))
@pytest.mark.parametrize("t", [1, 2])
def test_redundancy_floor(n, t):
    if t >= n:
        return
    red = math.log2(math.factorial(n) / sphere_upper(n, t))
    assert red >= t * math.log2(n) - t * math.log2(t + 1)


def test_report_shape():
    rep = bounds_report(5, 1, graph=True)
    assert rep["gv_lower"] == 5 and rep["sphere_upper"] == 24
    m = rep["measured"]
    assert m["V"] == 120 and m["max_degree"] <= 25
    assert rep["gv_lower"] <= m["greedy_alpha"] <= rep["sphere_upper"]
    assert isinstance(m["bollobas_value"], float)


def test_graph_cap():
    with pytest.raises(ValueError):
        build_graph(8, 1)
