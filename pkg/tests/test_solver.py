import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from plsrd.exceptions import InvalidOptions, TooLarge
from plsrd.fixtures import random_connected_graph
from plsrd.solver import (
    Algorithm,
    SolveOptions,
    brute_force,
    completion_lower_bound,
    enumerate_valid,
    max_extra_minus,
    solve,
)

from conftest import family, naive_is_plsrd, naive_optimum


@pytest.mark.parametrize("name,n,value", [("cycle", 3, 2), ("complete", 2, 1), ("star", 3, 3), ("path", 4, 2)])
def test_brute_force_examples(name, n, value):
    r = brute_force(family(name, n))
    assert r.optimum == value and r.proven_optimal
    assert naive_is_plsrd(family(name, n), r.witness) and sum(r.witness) == value


@pytest.mark.parametrize("name,n,value", [("wheel", 4, 3), ("prism", 4, 6), ("prism", 5, 7), ("grid3", 4, 8)])
def test_solve_examples(name, n, value):
    r = solve(family(name, n))
    assert r.optimum == value and r.proven_optimal
    assert r.algorithm is Algorithm.BACKTRACKING


def test_brute_force_matches_naive():
    for g in [family("path", 6), family("cycle", 7), family("wheel", 5), family("bipartite", 3, 2)]:
        assert brute_force(g).optimum == naive_optimum(g)


def test_brute_force_size_guard():
    with pytest.raises(TooLarge):
        brute_force(family("path", 17))
    with pytest.raises(TooLarge):
        list(enumerate_valid(family("path", 15)))


def test_enumerate_k2():
    got = set(enumerate_valid(family("complete", 2)))
    assert got == {(1, 1), (-1, 2), (2, -1), (1, 2), (2, 1), (2, 2)}


def test_enumerate_p3_and_order():
    got = list(enumerate_valid(family("path", 3)))
    assert (-1, 2, 1) in got and (1, 2, -1) in got
    expected = [f for f in itertools.product((-1, 1, 2), repeat=3) if naive_is_plsrd(family("path", 3), f)]
    assert got == expected


def _oracle_extra(m, o, t, r, cubic):
    best = -1
    for a in range(r + 1):
        for b in range(r - a + 1):
            c = r - a - b  # a extra -1s, b extra 1s, c extra 2s
            if m + a <= t + c and (not cubic or 2 * (o + b) >= m + a):
                best = max(best, a)
    return best


@settings(max_examples=400, deadline=None)
@given(m=st.integers(0, 6), o=st.integers(0, 6), t=st.integers(0, 6), r=st.integers(0, 8), cubic=st.booleans())
def test_max_extra_minus_matches_enumeration(m, o, t, r, cubic):
    assert max_extra_minus(m, o, t, r, cubic) == _oracle_extra(m, o, t, r, cubic)


@settings(max_examples=200, deadline=None)
@given(m=st.integers(0, 5), o=st.integers(0, 5), t=st.integers(0, 5), r=st.integers(0, 6), cubic=st.booleans())
def test_completion_bound_is_admissible(m, o, t, r, cubic):
    weight = o + 2 * t - m
    weights = [
        weight + b + 2 * (r - a - b) - a
        for a in range(r + 1)
        for b in range(r - a + 1)
        if m + a <= t + r - a - b and (not cubic or 2 * (o + b) >= m + a)
    ]
    lb = completion_lower_bound(weight, m, o, t, r, cubic)
    if not weights:
        assert lb is None
    else:
        assert lb == min(weights)


@settings(max_examples=40, deadline=None)
@given(n=st.integers(4, 10), seed=st.integers(0, 10**6))
def test_solve_equals_brute_force(n, seed):
    g = random_connected_graph(n, seed)
    a, b = solve(g), brute_force(g)
    assert a.optimum == b.optimum and a.proven_optimal
    assert a.witness == b.witness


def test_options_validation():
    with pytest.raises(InvalidOptions):
        SolveOptions(algorithm="magic")
    with pytest.raises(InvalidOptions):
        SolveOptions(workers=0)
    with pytest.raises(InvalidOptions):
        SolveOptions(node_budget=0)
    with pytest.raises(InvalidOptions):
        SolveOptions(time_budget=-1)


def test_threads_env(monkeypatch):
    monkeypatch.setenv("PLSRD_THREADS", "3")
    assert SolveOptions().workers == 3


def test_node_budget_returns_unproven_incumbent():
    g = family("ladder", 8)
    r = solve(g, SolveOptions(node_budget=50))
    assert not r.proven_optimal
    assert naive_is_plsrd(g, r.witness) and sum(r.witness) == r.optimum >= 10


def test_warm_start_and_upper_bound():
    g = family("ladder", 6)
    assert solve(g, SolveOptions(warm_start=[1] * 12)).optimum == 8
    # an over-optimistic bound falls back to a full search
    assert solve(g, SolveOptions(upper_bound=3)).optimum == 8


def test_parallel_matches_serial():
    g = family("prism", 7)
    serial = solve(g, SolveOptions(workers=1))
    parallel = solve(g, SolveOptions(workers=3))
    assert serial.optimum == parallel.optimum == 9
    assert serial.witness == parallel.witness


def test_solve_result_dict():
    d = solve(family("cycle", 4)).to_dict()
    assert set(d) == {"optimum", "witness", "nodes", "proven", "algorithm"}
    assert d["optimum"] == 3 and d["algorithm"] == "Backtracking"
