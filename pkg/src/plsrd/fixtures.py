"""Seeded random graphs used by tests and the verification harness."""

from __future__ import annotations

import random

import networkx as nx

from .graph import FamilyKind, FamilySpec, Graph


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree on ``n >= 2`` vertices via a Prüfer sequence."""
    if n < 2:
        raise ValueError("random_tree needs n >= 2")
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    t = nx.from_prufer_sequence(seq)
    return Graph.from_edges(n, t.edges())


def random_tree_spec(n: int, seed: int) -> FamilySpec:
    return FamilySpec(FamilyKind.EXPLICIT_TREE, edges=tuple(random_tree(n, seed).edges()))


def random_connected_graph(n: int, seed: int, p: float = 0.3) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    rng = random.Random(seed)
    base = random_tree(n, rng.randrange(2**31))
    edges = set(base.edges())
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def tree_corpus(count: int = 100, lo: int = 5, hi: int = 20, seed: int = 2024) -> list[Graph]:
    rng = random.Random(seed)
    return [random_tree(rng.randint(lo, hi), rng.randrange(2**31)) for _ in range(count)]


def connected_corpus(count: int = 50, lo: int = 4, hi: int = 12, seed: int = 7) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng.randint(lo, hi), rng.randrange(2**31)) for _ in range(count)]
