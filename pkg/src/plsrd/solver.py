"""Exact computation of the PLSRD number.

Two independent routes:

* :func:`brute_force` / :func:`enumerate_valid` score every one of the
  ``3**n`` labelings with vectorised numpy checks;
* :func:`solve` is a depth-first branch-and-bound with incremental
  feasibility checks and a counting lower bound.
"""

from __future__ import annotations

import enum
import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .exceptions import InvalidOptions, TooLarge
from .graph import Graph, is_regular
from .labeling import check_labeling, is_plsrd

BRUTE_FORCE_MAX_N = 16
ENUMERATE_MAX_N = 14
_LABEL_VALUES = np.array([-1, 1, 2], dtype=np.int8)
_CHUNK_DIGITS = 11


class Algorithm(str, enum.Enum):
    BRUTE_FORCE = "BruteForce"
    BACKTRACKING = "Backtracking"

    @classmethod
    def parse(cls, value) -> "Algorithm":
        if isinstance(value, cls):
            return value
        key = str(value).lower()
        if key in ("brute", "bruteforce", "brute_force"):
            return cls.BRUTE_FORCE
        if key in ("bnb", "backtracking", "branch_and_bound"):
            return cls.BACKTRACKING
        raise InvalidOptions(f"unknown algorithm {value!r}")


@dataclass(frozen=True)
class SolveResult:
    optimum: int
    witness: tuple[int, ...]
    nodes_explored: int
    proven_optimal: bool
    algorithm: Algorithm

    def to_dict(self) -> dict:
        return {
            "optimum": self.optimum,
            "witness": list(self.witness),
            "nodes": self.nodes_explored,
            "proven": self.proven_optimal,
            "algorithm": self.algorithm.value,
        }


@dataclass(frozen=True)
class SolveOptions:
    """Knobs for :func:`solve`.

    ``upper_bound`` restricts the search to labelings of weight at most
    that value; ``warm_start`` seeds the incumbent with a known labeling.
    ``workers`` defaults to ``$PLSRD_THREADS`` or 1.
    """

    algorithm: Algorithm | str = Algorithm.BACKTRACKING
    workers: int | None = None
    node_budget: int | None = None
    time_budget: float | None = None
    upper_bound: int | None = None
    warm_start: tuple[int, ...] | None = None
    canonical_witness: bool = True

    def __post_init__(self):
        object.__setattr__(self, "algorithm", Algorithm.parse(self.algorithm))
        if self.workers is None:
            object.__setattr__(self, "workers", int(os.environ.get("PLSRD_THREADS", "1") or 1))
        if self.workers < 1:
            raise InvalidOptions("workers must be >= 1")
        if self.node_budget is not None and self.node_budget <= 0:
            raise InvalidOptions("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise InvalidOptions("time_budget must be positive")
        if self.warm_start is not None:
            object.__setattr__(self, "warm_start", check_labeling(self.warm_start))


# ---------------------------------------------------------------- brute force


def _adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.float32)
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    return a


def _chunks(n: int) -> Iterator[np.ndarray]:
    """All labelings of length ``n`` in lexicographic order (-1 < 1 < 2), chunked."""
    total = 3**n
    step = 3 ** min(n, _CHUNK_DIGITS)
    powers = 3 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, step):
        idx = np.arange(start, min(start + step, total), dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % 3
        yield _LABEL_VALUES[digits]


def _valid_rows(labels: np.ndarray, adj: np.ndarray) -> np.ndarray:
    lf = labels.astype(np.float32)
    minus = labels == -1
    two = labels == 2
    guards = two.astype(np.float32) @ adj
    weak = minus.astype(np.float32) @ adj
    sums = lf + lf @ adj
    ok = np.all(~minus | (guards == 1), axis=1)
    ok &= np.all(~two | (weak <= 1), axis=1)
    ok &= np.all(sums >= 1, axis=1)
    return ok


def brute_force(g: Graph) -> SolveResult:
    """Minimum over all ``3**n`` labelings; the witness is lexicographically smallest."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got {g.n}")
    adj = _adjacency_matrix(g)
    best = None
    witness = None
    for labels in _chunks(g.n):
        ok = _valid_rows(labels, adj)
        if not ok.any():
            continue
        w = labels.sum(axis=1, dtype=np.int64)
        w = np.where(ok, w, np.iinfo(np.int64).max)
        i = int(np.argmin(w))
        if best is None or w[i] < best:
            best = int(w[i])
            witness = tuple(int(x) for x in labels[i])
    return SolveResult(best, witness, 3**g.n, True, Algorithm.BRUTE_FORCE)


def enumerate_valid(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every PLSRD function of ``g`` in lexicographic order."""
    if g.n > ENUMERATE_MAX_N:
        raise TooLarge(f"enumeration limited to n <= {ENUMERATE_MAX_N}, got {g.n}")
    adj = _adjacency_matrix(g)
    for labels in _chunks(g.n):
        for row in labels[_valid_rows(labels, adj)]:
            yield tuple(int(x) for x in row)


# ----------------------------------------------------------- branch and bound


def max_extra_minus(m: int, o: int, t: int, r: int, cubic: bool) -> int:
    """Most -1 labels the ``r`` undecided vertices can still take.

    ``m``, ``o``, ``t`` count decided vertices labeled -1, 1, 2.  Each -1
    needs its own 2 (so the -1 count never exceeds the 2 count) and, on
    3-regular graphs, ``2 * #1 >= #-1``.  Returns -1 when no completion
    satisfies these counting constraints.
    """
    d = t - m
    if r + d < 0:
        return -1
    # M extra -1s force max(0, M - d) extra 2s; the rest become 1s
    hi = min(r, (r + d) // 2)
    if not cubic:
        return hi
    for extra in range(hi, -1, -1):
        ones = r - max(0, extra - d) - extra
        if 2 * (o + ones) >= m + extra:
            return extra
    return -1


def completion_lower_bound(weight: int, m: int, o: int, t: int, r: int, cubic: bool) -> int | None:
    """Smallest total weight any completion can reach, or None if none is feasible."""
    extra = max_extra_minus(m, o, t, r, cubic)
    if extra < 0:
        return None
    return weight + r - 2 * extra + max(0, extra - (t - m))


def branching_order(g: Graph) -> list[int]:
    """Vertex order for the search.

    Starts at the highest-degree vertex and then repeatedly takes the vertex
    with the most already-ordered neighbours (ties: higher degree, lower
    index).  Closed neighbourhoods complete early, so the C1-C3 checks bite
    high in the tree.
    """
    n = g.n
    deg = g.degrees()
    placed = [False] * n
    touched = [0] * n
    order = []
    for _ in range(n):
        v = max((u for u in range(n) if not placed[u]), key=lambda u: (touched[u], deg[u], -u))
        placed[v] = True
        order.append(v)
        for u in g.adjacency[v]:
            touched[u] += 1
    return order


class _Budget(Exception):
    pass


class _Found(Exception):
    pass


class _Search:
    """Mutable search state; one instance per worker."""

    def __init__(self, g: Graph, order, values, cubic: bool, node_limit=None, deadline=None, shared=None):
        n = g.n
        self.g = g
        self.adj = g.adjacency
        self.closed = [(v,) + g.adjacency[v] for v in range(n)]
        self.order = list(order)
        self.values = tuple(values)
        self.cubic = cubic
        self.lab = [0] * n
        self.s = [0] * n  # sum of decided labels in N[v]
        self.und = [len(c) for c in self.closed]  # undecided in N[v]
        self.uopen = [len(a) for a in g.adjacency]  # undecided in N(v)
        self.g2 = [0] * n  # neighbours labeled 2
        self.m1 = [0] * n  # neighbours labeled -1
        self.counts = {-1: 0, 1: 0, 2: 0}
        self.weight = 0
        self.nodes = 0
        self.node_limit = node_limit
        self.deadline = deadline
        self.shared = shared
        self.threshold = None
        self.best = None
        self.best_weight = None
        self.first_only = False

    def assign(self, v, x):
        self.lab[v] = x
        self.weight += x
        self.counts[x] += 1
        s, und = self.s, self.und
        for w in self.closed[v]:
            s[w] += x
            und[w] -= 1
        uopen, g2, m1 = self.uopen, self.g2, self.m1
        for w in self.adj[v]:
            uopen[w] -= 1
            if x == 2:
                g2[w] += 1
            elif x == -1:
                m1[w] += 1

    def unassign(self, v):
        x = self.lab[v]
        self.lab[v] = 0
        self.weight -= x
        self.counts[x] -= 1
        s, und = self.s, self.und
        for w in self.closed[v]:
            s[w] -= x
            und[w] += 1
        uopen, g2, m1 = self.uopen, self.g2, self.m1
        for w in self.adj[v]:
            uopen[w] += 1
            if x == 2:
                g2[w] -= 1
            elif x == -1:
                m1[w] -= 1

    def locally_feasible(self, v) -> bool:
        lab, s, und, uopen, g2, m1, adj = self.lab, self.s, self.und, self.uopen, self.g2, self.m1, self.adj
        for w in self.closed[v]:
            lw = lab[w]
            if lw == -1:
                if g2[w] > 1:
                    return False
                if g2[w] == 0:
                    if uopen[w] == 0:
                        return False
                    # some undecided neighbour must still be able to guard w alone
                    if not any(lab[y] == 0 and m1[y] == 1 for y in adj[w]):
                        return False
                    if s[w] + 2 + (uopen[w] - 1) < 1:
                        return False
                elif s[w] + uopen[w] < 1:
                    return False
            elif lw == 2:
                if m1[w] > 1:
                    return False
                if s[w] + 2 * uopen[w] < 1:
                    return False
            elif s[w] + 2 * und[w] < 1:
                return False
        return True

    def bound(self, remaining):
        c = self.counts
        return completion_lower_bound(self.weight, c[-1], c[1], c[2], remaining, self.cubic)

    def current_threshold(self):
        if self.shared is not None:
            shared = self.shared.value
            if shared < self.threshold:
                self.threshold = shared
        return self.threshold

    def run(self, depth=0):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _Budget
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _Budget
        order = self.order
        remaining = len(order) - depth
        if remaining == 0:
            w = self.weight
            if w < self.current_threshold():
                self.best = tuple(self.lab)
                self.best_weight = w
                self.threshold = w
                if self.shared is not None:
                    with self.shared.get_lock():
                        if w < self.shared.value:
                            self.shared.value = w
                if self.first_only:
                    raise _Found
            return
        lb = self.bound(remaining)
        if lb is None or lb >= self.current_threshold():
            return
        v = order[depth]
        for x in self.values:
            self.assign(v, x)
            if self.locally_feasible(v):
                self.run(depth + 1)
            self.unassign(v)

    def apply_prefix(self, prefix) -> bool:
        for depth, x in enumerate(prefix):
            v = self.order[depth]
            self.assign(v, x)
            if not self.locally_feasible(v):
                return False
        return True


def _initial_incumbent(g: Graph, opts: SolveOptions):
    incumbent = tuple([1] * g.n)
    if opts.warm_start is not None:
        ws = check_labeling(opts.warm_start, g.n)
        if is_plsrd(g, ws) and sum(ws) < sum(incumbent):
            incumbent = ws
    return incumbent


def _prefixes(g: Graph, order, values, cubic, threshold, want: int):
    """Feasible partial assignments deep enough to give ``want`` tasks."""
    search = _Search(g, order, values, cubic)
    search.threshold = threshold
    frontier = [()]
    depth = 0
    while len(frontier) < want and depth < g.n:
        nxt = []
        for prefix in frontier:
            for x in values:
                cand = prefix + (x,)
                probe = _Search(g, order, values, cubic)
                probe.threshold = threshold
                if probe.apply_prefix(cand):
                    lb = probe.bound(g.n - len(cand))
                    if lb is not None and lb < threshold:
                        nxt.append(cand)
        frontier = nxt
        depth += 1
    return frontier, depth


_worker_shared = None


def _init_worker(shared):
    global _worker_shared
    _worker_shared = shared


def _run_subtree(args):
    g, order, values, cubic, prefix, node_limit, deadline = args
    search = _Search(g, order, values, cubic, node_limit, deadline, shared=_worker_shared)
    search.threshold = _worker_shared.value
    if not search.apply_prefix(prefix):
        return None, None, 1, True
    try:
        search.run(len(prefix))
        complete = True
    except _Budget:
        complete = False
    return search.best, search.best_weight, search.nodes, complete


def _search_parallel(g, order, values, cubic, threshold, opts, deadline):
    import multiprocessing as mp

    frontier, _ = _prefixes(g, order, values, cubic, threshold, want=8 * opts.workers)
    shared = mp.Value("q", threshold)
    per_task = None
    if opts.node_budget is not None:
        per_task = max(1, opts.node_budget // max(1, len(frontier)))
    tasks = [(g, order, values, cubic, p, per_task, deadline) for p in frontier]
    best, best_weight, nodes, complete = None, None, 0, True
    with ProcessPoolExecutor(max_workers=opts.workers, initializer=_init_worker, initargs=(shared,)) as pool:
        for lab, w, k, done in pool.map(_run_subtree, tasks):
            nodes += k
            complete &= done
            if lab is not None and (best_weight is None or w < best_weight):
                best, best_weight = lab, w
    return best, best_weight, nodes, complete


def _search_serial(g, order, values, cubic, threshold, opts, deadline):
    search = _Search(g, order, values, cubic, opts.node_budget, deadline)
    search.threshold = threshold
    try:
        search.run()
        complete = True
    except _Budget:
        complete = False
    return search.best, search.best_weight, search.nodes, complete


def lexicographic_witness(g: Graph, target: int, node_limit=None):
    """Lexicographically smallest labeling of weight <= ``target`` (index order, -1 < 1 < 2)."""
    search = _Search(g, range(g.n), (-1, 1, 2), is_regular(g, 3), node_limit)
    search.threshold = target + 1
    search.first_only = True
    try:
        search.run()
    except _Found:
        pass
    return search.best, search.nodes


def solve(g: Graph, opts: SolveOptions | None = None) -> SolveResult:
    """Exact minimum weight of a PLSRD function of ``g``.

    The search always starts from a valid incumbent (the all-ones labeling
    or a better warm start), so a witness is returned even when a budget
    stops it early; ``proven_optimal`` tells the two cases apart.
    """
    opts = opts or SolveOptions()
    if opts.algorithm is Algorithm.BRUTE_FORCE:
        return brute_force(g)
    start = time.monotonic()
    deadline = start + opts.time_budget if opts.time_budget is not None else None
    cubic = is_regular(g, 3)
    order = branching_order(g)
    values = (1, 2, -1)

    incumbent = _initial_incumbent(g, opts)
    inc_weight = sum(incumbent)
    threshold = inc_weight
    restricted = opts.upper_bound is not None and opts.upper_bound + 1 < threshold
    if restricted:
        threshold = opts.upper_bound + 1

    runner = _search_parallel if opts.workers > 1 else _search_serial
    best, best_weight, nodes, complete = runner(g, order, values, cubic, threshold, opts, deadline)
    if best is None and restricted and complete:
        # nothing at or below the supplied bound: it was too optimistic, search the rest
        remaining = None if opts.node_budget is None else max(1, opts.node_budget - nodes)
        retry = SolveOptions(Algorithm.BACKTRACKING, opts.workers, remaining, opts.time_budget, None, incumbent)
        best, best_weight, more, complete = runner(g, order, values, cubic, inc_weight, retry, deadline)
        nodes += more
    if best is None:
        best, best_weight = incumbent, inc_weight

    if complete and opts.canonical_witness:
        limit = None if opts.node_budget is None else max(1, opts.node_budget)
        try:
            lex, more = lexicographic_witness(g, best_weight, limit)
            nodes += more
            if lex is not None:
                best = lex
        except _Budget:
            pass
    return SolveResult(best_weight, tuple(best), nodes, complete, Algorithm.BACKTRACKING)


def all_labelings(n: int) -> Iterator[tuple[int, ...]]:
    """Plain generator over ``{-1, 1, 2}**n`` in lexicographic order."""
    return itertools.product((-1, 1, 2), repeat=n)


def check_witness(g: Graph, labels: Sequence[int]) -> bool:
    return is_plsrd(g, check_labeling(labels, g.n))
