"""Simple undirected graphs and the parametrized families studied here.

Every generator uses a fixed vertex numbering so labelings can be written
down as plain index-aligned sequences:

========================  ==================================================
family                    numbering
========================  ==================================================
path, cycle               ``0 .. n-1`` along the path / cycle
complete                  ``0 .. n-1``
complete bipartite        part X is ``0 .. p-1``, part Y is ``p .. p+n-1``
star                      hub ``0``, leaves ``1 .. n``
wheel                     hub ``0``, rim ``c_1 .. c_n`` is ``1 .. n``
ladder                    top row ``a_1 .. a_n`` is ``0 .. n-1``,
                          bottom row ``b_1 .. b_n`` is ``n .. 2n-1``
prism                     ladder numbering plus the two wrap edges
grid 3 x n                column-major, column ``j`` is ``3j, 3j+1, 3j+2``
                          from top to bottom
flower snark J_{2n+1}     ``a_0 .. a_2n`` first, then the b, c and d blocks
========================  ==================================================
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .exceptions import InvalidFamilyParams, NotATree


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0 .. n-1``.

    ``adjacency[v]`` is the strictly ascending tuple of neighbours of ``v``.
    Build instances with :meth:`from_edges` unless the adjacency is already
    canonical; the constructor checks every invariant either way.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"a graph needs at least one vertex, got n={self.n}")
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length does not match n")
        for v, nbrs in enumerate(self.adjacency):
            prev = -1
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if u <= prev:
                    raise ValueError(f"neighbours of {v} not strictly ascending")
                prev = u
                if v not in self.adjacency[u]:
                    raise ValueError(f"adjacency not symmetric on edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_connected(self) -> bool:
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == self.n

    def is_tree(self) -> bool:
        return self.num_edges == self.n - 1 and self.is_connected()


class FamilyKind(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "bipartite"
    STAR = "star"
    WHEEL = "wheel"
    LADDER = "ladder"
    PRISM = "prism"
    GRID3 = "grid3"
    FLOWER_SNARK = "flowersnark"
    EXPLICIT_TREE = "tree"


_MIN_N = {
    FamilyKind.PATH: 3,
    FamilyKind.CYCLE: 3,
    FamilyKind.COMPLETE: 2,
    FamilyKind.STAR: 1,
    FamilyKind.WHEEL: 4,
    FamilyKind.LADDER: 2,
    FamilyKind.PRISM: 3,
    FamilyKind.GRID3: 1,
    FamilyKind.FLOWER_SNARK: 2,
}

_ALIASES = {
    "complete_bipartite": FamilyKind.COMPLETE_BIPARTITE,
    "completebipartite": FamilyKind.COMPLETE_BIPARTITE,
    "flower_snark": FamilyKind.FLOWER_SNARK,
    "snark": FamilyKind.FLOWER_SNARK,
    "explicit_tree": FamilyKind.EXPLICIT_TREE,
    "grid": FamilyKind.GRID3,
}


def parse_kind(name: str) -> FamilyKind:
    key = name.strip().lower()
    try:
        return _ALIASES.get(key) or FamilyKind(key)
    except ValueError:
        raise InvalidFamilyParams(f"unknown family {name!r}") from None


@dataclass(frozen=True)
class FamilySpec:
    """Names one member of a graph family.

    ``n`` is the family parameter (for the flower snark ``J_{2n+1}`` it is
    the ``n`` in the subscript), ``p`` the size of the first part of a
    complete bipartite graph, and ``edges`` the edge list of an explicit
    tree.
    """

    kind: FamilyKind
    n: int | None = None
    p: int | None = None
    edges: tuple[tuple[int, int], ...] | None = field(default=None)

    @classmethod
    def of(cls, name: str, n: int | None = None, p: int | None = None, edges=None) -> "FamilySpec":
        kind = parse_kind(name)
        if edges is not None:
            edges = tuple((int(u), int(v)) for u, v in edges)
        spec = cls(kind, n, p, edges)
        spec.validate()
        return spec

    def validate(self) -> None:
        """Raise :class:`InvalidFamilyParams` (or :class:`NotATree`) when out of range."""
        kind = self.kind
        if kind is FamilyKind.EXPLICIT_TREE:
            if self.edges is None:
                raise InvalidFamilyParams("an explicit tree needs an edge list")
            n = len(self.edges) + 1
            used = {x for e in self.edges for x in e}
            if used and (min(used) < 0 or max(used) >= n):
                raise NotATree(f"a tree with {len(self.edges)} edges must use vertices 0..{n - 1}")
            if any(u == v for u, v in self.edges):
                raise NotATree("self-loop in tree edge list")
            if not Graph.from_edges(n, self.edges).is_tree():
                raise NotATree("edge list has a cycle or is disconnected")
            return
        if self.n is None or isinstance(self.n, bool) or int(self.n) != self.n:
            raise InvalidFamilyParams(f"{kind.value} needs an integer n")
        if kind is FamilyKind.COMPLETE_BIPARTITE:
            if self.p is None or not 2 <= self.p <= self.n:
                raise InvalidFamilyParams(f"bipartite needs 2 <= p <= n, got p={self.p}, n={self.n}")
            return
        lo = _MIN_N[kind]
        if self.n < lo:
            raise InvalidFamilyParams(f"{kind.value} needs n >= {lo}, got n={self.n}")

    @property
    def label(self) -> str:
        if self.kind is FamilyKind.COMPLETE_BIPARTITE:
            return f"{self.kind.value}({self.p},{self.n})"
        if self.kind is FamilyKind.EXPLICIT_TREE:
            return f"tree[{len(self.edges or ())} edges]"
        return f"{self.kind.value}({self.n})"


def generate(spec: FamilySpec) -> Graph:
    """Build the graph named by ``spec`` in its canonical vertex numbering."""
    spec.validate()
    kind, n = spec.kind, spec.n
    if kind is FamilyKind.PATH:
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind is FamilyKind.CYCLE:
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind is FamilyKind.COMPLETE:
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        p = spec.p
        return Graph.from_edges(p + n, [(u, v) for u in range(p) for v in range(p, p + n)])
    if kind is FamilyKind.STAR:
        return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])
    if kind is FamilyKind.WHEEL:
        rim = [(i, i % n + 1) for i in range(1, n + 1)]
        return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)] + rim)
    if kind is FamilyKind.LADDER:
        return Graph.from_edges(2 * n, _ladder_edges(n))
    if kind is FamilyKind.PRISM:
        return Graph.from_edges(2 * n, _ladder_edges(n) + [(0, n - 1), (n, 2 * n - 1)])
    if kind is FamilyKind.GRID3:
        edges = []
        for j in range(n):
            edges += [(3 * j, 3 * j + 1), (3 * j + 1, 3 * j + 2)]
            if j + 1 < n:
                edges += [(3 * j + r, 3 * (j + 1) + r) for r in range(3)]
        return Graph.from_edges(3 * n, edges)
    if kind is FamilyKind.FLOWER_SNARK:
        return _flower_snark(n)
    if kind is FamilyKind.EXPLICIT_TREE:
        return Graph.from_edges(len(spec.edges) + 1, spec.edges)
    raise InvalidFamilyParams(f"unknown family {kind!r}")


def _ladder_edges(n: int) -> list[tuple[int, int]]:
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(n + i, n + i + 1) for i in range(n - 1)]
    edges += [(i, n + i) for i in range(n)]
    return edges


def flower_snark_index(part: str, i: int, n: int) -> int:
    """Vertex index of ``a_i``/``b_i``/``c_i``/``d_i`` in ``J_{2n+1}``."""
    m = 2 * n + 1
    return "abcd".index(part) * m + i % m


def _flower_snark(n: int) -> Graph:
    m = 2 * n + 1
    a, b, c, d = (lambda i, k=k: k * m + i for k in range(4))
    edges = []
    for i in range(m - 1):
        edges += [(a(i), a(i + 1)), (c(i), c(i + 1)), (d(i), d(i + 1))]
    edges += [(a(m - 1), a(0)), (c(m - 1), d(0)), (d(m - 1), c(0))]
    for i in range(m):
        edges += [(a(i), b(i)), (b(i), c(i)), (b(i), d(i))]
    return Graph.from_edges(4 * m, edges)


def min_degree(g: Graph) -> int:
    return min(len(a) for a in g.adjacency)


def is_regular(g: Graph, k: int) -> bool:
    if k < 0:
        raise ValueError("k must be non-negative")
    return all(len(a) == k for a in g.adjacency)


def pairwise_distance_leq(g: Graph, u: int, v: int, d: int) -> bool:
    """True iff some path of length at most ``d`` joins ``u`` and ``v``."""
    if d < 0:
        raise ValueError("d must be non-negative")
    if u == v:
        return True
    frontier = {u}
    seen = {u}
    for _ in range(d):
        nxt = set()
        for x in frontier:
            for y in g.adjacency[x]:
                if y == v:
                    return True
                if y not in seen:
                    seen.add(y)
                    nxt.add(y)
        if not nxt:
            return False
        frontier = nxt
    return False
