import itertools
from collections import Counter

from plsrd.constructions import flower_snark_labels
from plsrd.graph import FamilySpec, generate

ACCEPTANCE_LINES = []


def naive_is_plsrd(g, f):
    """Definition-level check written independently of plsrd.labeling."""
    minus = {v for v in range(g.n) if f[v] == -1}
    two = {v for v in range(g.n) if f[v] == 2}
    for v in minus:
        if len(set(g.adjacency[v]) & two) != 1:
            return False
    for v, w in itertools.combinations(sorted(minus), 2):
        if set(g.adjacency[v]) & set(g.adjacency[w]) & two:
            return False
    return all(f[v] + sum(f[u] for u in g.adjacency[v]) >= 1 for v in range(g.n))


def naive_optimum(g):
    best = None
    for f in itertools.product((-1, 1, 2), repeat=g.n):
        if naive_is_plsrd(g, f) and (best is None or sum(f) < best):
            best = sum(f)
    return best


def family(name, n=None, p=None):
    return generate(FamilySpec.of(name, n, p))


# vertex signatures (f, #-1 nbrs, #1 nbrs, #2 nbrs, closed sum) allowed in the even and odd flower snark labelings
EVEN_ROWS = {(2, 1, 2, 0, 3), (1, 2, 0, 1, 1), (-1, 1, 1, 1, 1), (2, 1, 1, 1, 4),
             (-1, 0, 2, 1, 3), (1, 1, 0, 2, 4), (2, 1, 0, 2, 5), (1, 0, 0, 3, 7)}
ODD_ROWS = {(2, 1, 2, 0, 3), (1, 2, 0, 1, 1), (-1, 1, 1, 1, 1), (2, 1, 1, 1, 4),
            (1, 1, 1, 1, 3), (-1, 0, 2, 1, 3), (1, 1, 0, 2, 4), (1, 1, 2, 0, 2)}


def snark_signatures(n):
    g = generate(FamilySpec.of("flowersnark", n))
    f = flower_snark_labels(n)
    out = []
    for v in range(g.n):
        c = Counter(f[u] for u in g.neighbors(v))
        out.append((f[v], c[-1], c[1], c[2], f[v] + sum(f[u] for u in g.neighbors(v))))
    return g, f, out



def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
