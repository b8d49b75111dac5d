"""Closed-form values, the cubic lower bound and 2-packing upper bounds."""

from __future__ import annotations

from dataclasses import dataclass, field

from .constructions import ConstructionResult
from .exceptions import (
    ConstructionError,
    InvalidFamilyParams,
    MinDegreeTooLow,
    NotAPacking,
    NotATree,
    NotCubic,
    TooLargeForExact,
)
from .graph import FamilyKind, FamilySpec, Graph, generate, is_regular, min_degree
from .labeling import validate

EXACT_PACKING_MAX_N = 24


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class BoundsRecord:
    lower: int | None = None
    upper: int | None = None
    exact: int | None = None
    provenance: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.exact is not None and (self.lower != self.exact or self.upper != self.exact):
            raise ValueError("an exact record must have lower == upper == exact")
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")

    @classmethod
    def exactly(cls, value: int, source: str) -> "BoundsRecord":
        return cls(value, value, value, {"exact": source})

    def to_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper, "exact": self.exact, "provenance": dict(self.provenance)}


@dataclass(frozen=True)
class PackingSet:
    """Vertex set with pairwise distance at least 3.

    ``exact`` is False for greedy results, which are maximal but not
    necessarily maximum.
    """

    vertices: tuple[int, ...]
    exact: bool = True

    @property
    def size(self) -> int:
        return len(self.vertices)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices)}


@dataclass(frozen=True)
class PackingBound:
    upper: int
    certificate: tuple[int, ...]


def closed_form(spec: FamilySpec) -> BoundsRecord:
    """Known value (or bound pair) of the PLSRD number for a family member."""
    spec.validate()
    kind, n = spec.kind, spec.n
    if kind is FamilyKind.COMPLETE:
        return BoundsRecord.exactly(n - 1, "complete graph K_n: n-1")
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        return BoundsRecord.exactly(spec.p + n - 2, "complete bipartite K_{p,n}: p+n-2")
    if kind is FamilyKind.STAR:
        return BoundsRecord.exactly(n, "star S_n: n")
    if kind is FamilyKind.WHEEL:
        if n % 4 == 0:
            return BoundsRecord.exactly(_ceil_div(n, 2) + 1, "wheel W_n, n = 0 mod 4: ceil(n/2)+1")
        return BoundsRecord.exactly(_ceil_div(n + 1, 2) + 1, "wheel W_n: ceil((n+1)/2)+1")
    if kind is FamilyKind.PATH:
        return BoundsRecord.exactly(2 * n // 3, "path P_n: floor(2n/3)")
    if kind is FamilyKind.CYCLE:
        return BoundsRecord.exactly(_ceil_div(2 * n, 3), "cycle C_n: ceil(2n/3)")
    if kind is FamilyKind.LADDER:
        return BoundsRecord.exactly(_ceil_div(6 * n, 5), "ladder L_n: ceil(6n/5)")
    if kind is FamilyKind.PRISM:
        base = _ceil_div(6 * n, 5)
        if n % 10 in (4, 5):
            return BoundsRecord.exactly(base + 1, "prism, n = 4,5 mod 10: ceil(6n/5)+1")
        return BoundsRecord.exactly(base, "prism: ceil(6n/5)")
    if kind is FamilyKind.GRID3:
        return BoundsRecord.exactly(2 * n, "grid 3 x n: 2n")
    if kind is FamilyKind.FLOWER_SNARK:
        upper = 5 * n + 3 if n % 2 == 0 else 5 * n + 4
        lower = _ceil_div(3 * 4 * (2 * n + 1), 5)
        return BoundsRecord(
            lower,
            upper,
            None,
            {
                "lower": "3-regular lower bound ceil(3|V|/5)",
                "upper": "flower snark construction: 5n+3 (n even), 5n+4 (n odd)",
            },
        )
    if kind is FamilyKind.EXPLICIT_TREE:
        g = generate(spec)
        s = max_two_packing(g, exact=g.n <= EXACT_PACKING_MAX_N)
        tag = "tree: n - |max 2-packing|" if s.exact else "tree: n - |greedy 2-packing|"
        return BoundsRecord(None, g.n - s.size, None, {"upper": tag})
    raise InvalidFamilyParams(f"unknown family {kind!r}")


def cubic_lower_bound(g: Graph) -> int:
    if not is_regular(g, 3):
        raise NotCubic("the 3/5 lower bound needs a 3-regular graph")
    return _ceil_div(3 * g.n, 5)


def _within_two(g: Graph) -> list[int]:
    """Bitmask of vertices at distance <= 2 from each vertex (itself included)."""
    adj = g.adjacency
    masks = []
    for v in range(g.n):
        m = 1 << v
        for u in adj[v]:
            m |= 1 << u
            for w in adj[u]:
                m |= 1 << w
        masks.append(m)
    return masks


def is_two_packing(g: Graph, vertices) -> bool:
    masks = _within_two(g)
    vs = list(vertices)
    if len(set(vs)) != len(vs) or any(not 0 <= v < g.n for v in vs):
        return False
    chosen = 0
    for v in vs:
        chosen |= 1 << v
    return all(masks[v] & chosen == 1 << v for v in vs)


def greedy_two_packing(g: Graph) -> PackingSet:
    masks = _within_two(g)
    blocked = 0
    chosen = []
    for v in sorted(range(g.n), key=lambda v: (g.degree(v), v)):
        if not blocked >> v & 1:
            chosen.append(v)
            blocked |= masks[v]
    return PackingSet(tuple(sorted(chosen)), exact=False)


def max_two_packing(g: Graph, exact: bool = True) -> PackingSet:
    """Largest 2-packing (``exact``) or a greedy maximal one.

    Exact mode branches on vertices in index order, taking the vertex
    before skipping it, so the first maximum set reached is the
    lexicographically smallest one.
    """
    if not exact:
        return greedy_two_packing(g)
    if g.n > EXACT_PACKING_MAX_N:
        raise TooLargeForExact(f"exact 2-packing limited to n <= {EXACT_PACKING_MAX_N}, got {g.n}")
    masks = _within_two(g)
    # greedy size - 1 keeps equal-size sets reachable so the lexicographic tie-break holds
    best_size = greedy_two_packing(g).size - 1
    best = 0

    def search(cand: int, chosen: int, size: int) -> None:
        nonlocal best, best_size
        if size + cand.bit_count() <= best_size:
            return
        if not cand:
            best, best_size = chosen, size
            return
        low = cand & -cand
        v = low.bit_length() - 1
        search(cand & ~masks[v], chosen | low, size + 1)
        search(cand & ~low, chosen, size)

    search((1 << g.n) - 1, 0, 0)
    return PackingSet(tuple(v for v in range(g.n) if best >> v & 1), exact=True)


def _require_packing(g: Graph, s: PackingSet) -> None:
    if not is_two_packing(g, s.vertices):
        raise NotAPacking(f"{list(s.vertices)} is not a 2-packing")


def packing_upper_bound(g: Graph, s: PackingSet) -> PackingBound:
    """``n - |S|`` together with the labeling that realises it (needs min degree >= 2)."""
    if min_degree(g) < 2:
        raise MinDegreeTooLow("the packing bound needs minimum degree >= 2")
    _require_packing(g, s)
    f = [1] * g.n
    for v in s.vertices:
        f[v] = -1
        f[g.adjacency[v][0]] = 2
    report = validate(g, f)
    if not report.is_valid:
        raise ConstructionError("packing certificate failed validation", report)
    return PackingBound(g.n - s.size, tuple(f))


def tree_construction(t: Graph, s: PackingSet) -> ConstructionResult:
    """Label a tree from a 2-packing ``S``; the weight is ``n - |S|``.

    Per vertex ``v`` of ``S``: a leaf gets -1 and its support 2; a support
    vertex gets 2 and its lowest-indexed leaf -1; any other vertex gets -1
    and its lowest-indexed neighbour 2.  Everything else is labeled 1.
    """
    if t.n < 2 or not t.is_tree():
        raise NotATree("tree_construction needs a tree with at least 2 vertices")
    _require_packing(t, s)
    adj = t.adjacency
    f = [1] * t.n
    for v in s.vertices:
        if len(adj[v]) == 1:
            f[v] = -1
            f[adj[v][0]] = 2
            continue
        leaves = [u for u in adj[v] if len(adj[u]) == 1]
        if leaves:
            f[v] = 2
            f[leaves[0]] = -1
        else:
            f[v] = -1
            f[adj[v][0]] = 2
    report = validate(t, f)
    if not report.is_valid:
        raise ConstructionError("tree labeling failed validation", report)
    spec = FamilySpec(FamilyKind.EXPLICIT_TREE, edges=tuple(t.edges()))
    return ConstructionResult(tuple(f), t.n - s.size, spec)
