"""Explicit labelings certifying the upper bound for each graph family.

Ladder and prism labelings are assembled from two-row column blocks; the
top row maps to the ``a`` vertices and the bottom row to the ``b`` vertices
of the canonical numbering in :mod:`plsrd.graph`.  Every labeling is run
through :func:`plsrd.labeling.validate` before it is returned, so an
ill-formed pattern surfaces as :class:`ConstructionError` instead of a
silently invalid certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import ConstructionError, UnsupportedFamily
from .graph import FamilyKind, FamilySpec, generate
from .labeling import stats, validate

Block = tuple[tuple[int, ...], tuple[int, ...]]


@dataclass(frozen=True)
class ConstructionResult:
    labeling: tuple[int, ...]
    claimed_weight: int
    family: FamilySpec

    def sidecar(self) -> dict:
        out = {"family": self.family.kind.value, "n": self.family.n, "claimed_weight": self.claimed_weight}
        if self.family.p is not None:
            out["p"] = self.family.p
        return out


# ladder blocks on L_5, both of weight 6
LADDER_X: Block = ((-1, 1, -1, 2, 2), (2, 2, -1, 1, -1))
LADDER_Y: Block = ((2, 2, -1, 1, -1), (-1, 1, -1, 2, 2))

# columns appended after the L_{5k} part, keyed by n mod 5
LADDER_TAILS: dict[int, Block] = {
    0: ((), ()),
    1: ((1,), (1,)),
    2: ((1, 2), (1, -1)),
    3: ((1, -1, 2), (2, -1, 1)),
    4: ((1, -1, 2, 2), (2, -1, 1, -1)),
}

PRISM_3: Block = ((1, -1, 2), (2, -1, 1))

# closing blocks for the prism, keyed by n mod 10
PRISM_TAILS: dict[int, Block] = {
    1: ((2, 2, -1, 1, 1, -1), (-1, 1, -1, 2, 1, 2)),
    2: ((2, 2, -1, 1, 2, -1, 1), (-1, 1, -1, 2, 1, -1, 2)),
    3: ((2, 2, -1, 1, 2, -1, 1, -1), (-1, 1, -1, 2, 1, -1, 2, 2)),
    4: ((1, -1, 2, 1), (2, -1, 1, 1)),
    5: ((-1, 1, -1, 2, 1), (2, 2, -1, 1, 1)),
    6: ((1,), (1,)),
    7: ((2, 1), (-1, 1)),
    8: ((2, -1, 1), (1, -1, 2)),
    9: ((2, -1, 1, -1), (1, -1, 2, 2)),
}


def _join(*blocks: Block) -> Block:
    top: list[int] = []
    bottom: list[int] = []
    for t, b in blocks:
        top.extend(t)
        bottom.extend(b)
    return tuple(top), tuple(bottom)


def _rows_to_labels(block: Block) -> tuple[int, ...]:
    top, bottom = block
    return top + bottom


def ladder_pattern(n: int) -> Block:
    k, r = divmod(n, 5)
    if k % 2 == 0:
        body = [LADDER_X, LADDER_Y] * (k // 2)
        return _join(*body, LADDER_TAILS[r])
    # (YX)^j Y plus tail, with the rows swapped so that L_5 is block X
    top, bottom = _join(*[LADDER_Y, LADDER_X] * ((k - 1) // 2), LADDER_Y, LADDER_TAILS[r])
    return bottom, top


def prism_pattern(n: int) -> Block:
    if n == 3:
        return PRISM_3
    q, r = divmod(n, 10)
    xy = [LADDER_X, LADDER_Y]
    if r == 0:
        blocks = xy * q
    elif r in (1, 2, 3):
        blocks = xy * (q - 1) + [LADDER_X, PRISM_TAILS[r]]
    elif r in (4, 5):
        blocks = xy * q + [PRISM_TAILS[r]]
    else:
        blocks = xy * q + [LADDER_X, PRISM_TAILS[r]]
    return _join(*blocks)


def _path_like(n: int, cycle: bool) -> list[int]:
    k, r = divmod(n, 3)
    block = [-1, 2, 1]
    if r == 0:
        return block * k
    if r == 1:
        return block * (k - 1) + ([-1, 2, 1, 1] if cycle else [-1, 2, 2, -1])
    return block * k + ([1, 1] if cycle else [2, -1])


def _wheel(n: int) -> list[int]:
    k, r = divmod(n, 4)
    rim = [2, -1, -1, 2] * k + {0: [], 1: [1], 2: [1, 1], 3: [2, -1, 1]}[r]
    return [1] + rim


def _grid3(n: int) -> list[int]:
    f = [0] * (3 * n)
    for j in range(n):
        top, bottom = (-1, 1) if j % 2 == 0 else (1, -1)
        f[3 * j], f[3 * j + 1], f[3 * j + 2] = top, 2, bottom
    return f


def flower_snark_labels(n: int) -> tuple[int, ...]:
    """Labels of ``J_{2n+1}`` symmetric about the central index ``n``."""
    m = 2 * n + 1
    a, b, c, d = ([0] * m for _ in range(4))
    if n % 2 == 0:
        a[n], a[n - 1], a[n + 1], a[n - 2], a[n + 2] = 2, 1, 1, -1, -1
        b[n], b[n - 1], b[n + 1], b[n - 2], b[n + 2] = -1, -1, -1, 2, 2
        c[n], c[n - 1], c[n + 1], c[n - 2], c[n + 2] = 1, -1, 2, 2, 1
        d[n], d[n - 1], d[n + 1], d[n - 2], d[n + 2] = 1, 2, -1, 1, 2
        offset = 2
    else:
        a[n], a[n - 1], a[n + 1] = 2, 1, 1
        b[n], b[n - 1], b[n + 1] = -1, -1, -1
        c[n], c[n - 1], c[n + 1] = 1, 1, 1
        d[n], d[n - 1], d[n + 1] = 1, 2, 2
        offset = 1
    for j in range(1, n - offset + 1):
        heavy = j % 4 in (0, 1)
        left, right = n - offset - j, n + offset + j
        a[left] = a[right] = -1 if heavy else 2
        b[left] = b[right] = 1
        c[left] = c[right] = d[left] = d[right] = 2 if heavy else -1
    return tuple(a + b + c + d)


def _claimed(spec: FamilySpec) -> int:
    from .bounds import closed_form

    rec = closed_form(spec)
    return rec.exact if rec.exact is not None else rec.upper


def _labels(spec: FamilySpec) -> list[int] | tuple[int, ...]:
    kind, n = spec.kind, spec.n
    if kind is FamilyKind.COMPLETE:
        return [-1, 2] + [1] * (n - 2)
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        p = spec.p
        return [-1, 2] + [1] * (p - 2) + [-1, 2] + [1] * (n - 2)
    if kind is FamilyKind.STAR:
        return [2, -1] + [1] * (n - 1)
    if kind is FamilyKind.WHEEL:
        return _wheel(n)
    if kind is FamilyKind.PATH:
        return _path_like(n, cycle=False)
    if kind is FamilyKind.CYCLE:
        return _path_like(n, cycle=True)
    if kind is FamilyKind.LADDER:
        return _rows_to_labels(ladder_pattern(n))
    if kind is FamilyKind.PRISM:
        return _rows_to_labels(prism_pattern(n))
    if kind is FamilyKind.GRID3:
        return _grid3(n)
    if kind is FamilyKind.FLOWER_SNARK:
        return flower_snark_labels(n)
    raise UnsupportedFamily(f"no direct construction for {kind.value}; use bounds.tree_construction")


def construct(spec: FamilySpec) -> ConstructionResult:
    """Labeling realising the closed-form (or upper-bound) value for ``spec``."""
    spec.validate()
    labels = tuple(_labels(spec))
    claimed = _claimed(spec)
    g = generate(spec)
    report = validate(g, labels)
    if not report.is_valid:
        raise ConstructionError(f"construction for {spec.label} violates the definition", report)
    w = stats(labels).weight
    if w != claimed:
        raise ConstructionError(f"construction for {spec.label} has weight {w}, expected {claimed}")
    return ConstructionResult(labels, claimed, spec)


def formula_value(spec: FamilySpec):
    """Closed-form record for ``spec``; see :func:`plsrd.bounds.closed_form`."""
    from .bounds import closed_form

    return closed_form(spec)
