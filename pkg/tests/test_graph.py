import networkx as nx
import pytest

from plsrd.exceptions import InvalidFamilyParams, NotATree
from plsrd.graph import (
    FamilyKind,
    FamilySpec,
    Graph,
    flower_snark_index,
    generate,
    is_regular,
    min_degree,
    pairwise_distance_leq,
)
from plsrd.io import graph_to_json

from conftest import family


def test_path_3():
    g = family("path", 3)
    assert g.n == 3
    assert g.edges() == [(0, 1), (1, 2)]


def test_prism_3_is_cubic():
    g = family("prism", 3)
    assert (g.n, g.num_edges) == (6, 9)
    assert g.degrees() == [3] * 6


def test_flower_snark_j5():
    g = family("flowersnark", 2)
    assert (g.n, g.num_edges) == (20, 30)
    assert is_regular(g, 3)
    a, c, d = (lambda i, k=k: flower_snark_index(k, i, 2) for k in "acd")
    assert g.has_edge(a(4), a(0))
    assert g.has_edge(c(4), d(0))
    assert g.has_edge(d(4), c(0))
    assert not g.has_edge(c(4), c(0))


@pytest.mark.parametrize(
    "name,n,expected",
    [("star", 4, 1), ("prism", 5, 3), ("complete", 6, 5)],
)
def test_min_degree(name, n, expected):
    assert min_degree(family(name, n)) == expected


@pytest.mark.parametrize(
    "name,n,k,expected",
    [("prism", 4, 3, True), ("wheel", 5, 3, False), ("cycle", 7, 2, True)],
)
def test_is_regular(name, n, k, expected):
    assert is_regular(family(name, n), k) is expected


def test_pairwise_distance_examples():
    assert pairwise_distance_leq(family("path", 5), 0, 2, 2)
    assert not pairwise_distance_leq(family("path", 5), 0, 3, 2)
    assert not pairwise_distance_leq(family("cycle", 6), 0, 3, 2)


@pytest.mark.parametrize("name,n", [("cycle", 6), ("prism", 5), ("grid3", 3), ("flowersnark", 2), ("wheel", 6)])
def test_pairwise_distance_matches_bfs(name, n):
    g = family(name, n)
    dist = dict(nx.all_pairs_shortest_path_length(nx.Graph(g.edges())))
    for u in range(g.n):
        for v in range(g.n):
            for d in range(4):
                assert pairwise_distance_leq(g, u, v, d) == (dist[u][v] <= d)


def _closed_forms(name, n):
    return {
        "ladder": (2 * n, 3 * n - 2),
        "prism": (2 * n, 3 * n),
        "flowersnark": (8 * n + 4, 12 * n + 6),
        "wheel": (n + 1, 2 * n),
        "grid3": (3 * n, 5 * n - 3),
        "path": (n, n - 1),
        "cycle": (n, n),
        "complete": (n, n * (n - 1) // 2),
        "star": (n + 1, n),
    }[name]


@pytest.mark.parametrize("name", ["ladder", "prism", "flowersnark", "wheel", "grid3", "path", "cycle", "complete", "star"])
def test_counts_match_closed_forms(name):
    lo = {"ladder": 2, "prism": 3, "flowersnark": 2, "wheel": 4, "grid3": 1, "path": 3, "cycle": 3, "complete": 2, "star": 1}[name]
    for n in range(lo, lo + 12):
        g = family(name, n)
        assert (g.n, g.num_edges) == _closed_forms(name, n)
        # round trip through the constructor re-checks symmetry and ordering
        assert Graph(g.n, g.adjacency) == g


def test_bipartite_parts():
    g = family("bipartite", 4, 3)
    assert g.n == 7
    assert all(set(g.adjacency[u]) == set(range(3, 7)) for u in range(3))


def test_grid_is_column_major():
    g = family("grid3", 2)
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5)]


def test_generate_is_deterministic():
    for name, n in [("prism", 7), ("flowersnark", 3), ("grid3", 4)]:
        assert graph_to_json(family(name, n)) == graph_to_json(family(name, n))


@pytest.mark.parametrize(
    "name,n,p",
    [("path", 2, None), ("cycle", 2, None), ("complete", 1, None), ("bipartite", 3, 1), ("bipartite", 3, 4),
     ("star", 0, None), ("wheel", 3, None), ("ladder", 1, None), ("prism", 2, None), ("grid3", 0, None),
     ("flowersnark", 1, None)],
)
def test_out_of_range_params(name, n, p):
    with pytest.raises(InvalidFamilyParams):
        FamilySpec.of(name, n, p)


def test_explicit_tree():
    spec = FamilySpec.of("tree", edges=[(0, 1), (1, 2), (1, 3)])
    g = generate(spec)
    assert g.n == 4 and g.is_tree()
    assert spec.kind is FamilyKind.EXPLICIT_TREE


@pytest.mark.parametrize("edges", [[(0, 1), (1, 2), (2, 0)], [(0, 1), (2, 3), (3, 4)], [(0, 0)]])
def test_not_a_tree(edges):
    with pytest.raises(NotATree):
        FamilySpec.of("tree", edges=edges)


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        Graph(2, ((1,), ()))
    with pytest.raises(ValueError):
        Graph(2, ((0,), ()))
