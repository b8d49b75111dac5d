"""Labelings ``f: V -> {-1, 1, 2}`` and the checker for conditions C1-C3.

A labeling is any integer sequence index-aligned with the graph's vertices.
Writing ``V_-1``, ``V_1`` and ``V_2`` for the vertices carrying each label,
``f`` is a perfect locating signed Roman dominating (PLSRD) function when

* C1: every vertex of ``V_-1`` has exactly one neighbour in ``V_2``;
* C2: no vertex of ``V_2`` has two neighbours in ``V_-1``;
* C3: the labels over every closed neighbourhood sum to at least 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from .exceptions import InvalidLabel, LengthMismatch
from .graph import Graph

LABELS = (-1, 1, 2)


class ViolationKind(str, enum.Enum):
    C1_NO_GUARD = "C1_NoGuard"
    C1_MULTI_GUARD = "C1_MultiGuard"
    C2_SHARED_GUARD = "C2_SharedGuard"
    C3_NONPOSITIVE_SUM = "C3_NonpositiveSum"


_KIND_RANK = {k: i for i, k in enumerate(ViolationKind)}


@dataclass(frozen=True)
class Violation:
    """One broken condition.

    For C1 ``vertices`` is the unguarded/over-guarded vertex and ``detail``
    the number of neighbours labeled 2.  For C2 ``vertices`` is the pair of
    -1 vertices and ``detail`` the index of the guard they share.  For C3
    ``detail`` is the closed-neighbourhood sum.
    """

    kind: ViolationKind
    vertices: tuple[int, ...]
    detail: int

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.vertices, self.detail)

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "vertices": list(self.vertices), "detail": self.detail}


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()

    @property
    def is_valid(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.is_valid

    def __len__(self):
        return len(self.violations)

    def __iter__(self):
        return iter(self.violations)

    def kinds(self) -> list[ViolationKind]:
        return [v.kind for v in self.violations]

    def to_list(self) -> list[dict]:
        return [v.to_dict() for v in self.violations]


@dataclass(frozen=True)
class LabelingStats:
    count_minus: int
    count_one: int
    count_two: int
    weight: int

    @property
    def n(self) -> int:
        return self.count_minus + self.count_one + self.count_two


def check_labeling(f: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """Return ``f`` as a tuple after checking labels (and length, if ``n`` given)."""
    labels = tuple(int(x) for x in f)
    for i, x in enumerate(labels):
        if x not in LABELS:
            raise InvalidLabel(f"label {x} at vertex {i} is not one of -1, 1, 2")
    if n is not None and len(labels) != n:
        raise LengthMismatch(f"labeling has {len(labels)} entries, graph has {n} vertices")
    return labels


def stats(f: Sequence[int]) -> LabelingStats:
    labels = check_labeling(f)
    m = labels.count(-1)
    o = labels.count(1)
    t = labels.count(2)
    return LabelingStats(m, o, t, o + 2 * t - m)


def weight(f: Sequence[int]) -> int:
    return sum(f)


def closed_neighborhood_sum(g: Graph, f: Sequence[int], v: int) -> int:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range")
    return f[v] + sum(f[u] for u in g.adjacency[v])


def validate(g: Graph, f: Sequence[int]) -> ValidationReport:
    """Collect every violation of C1-C3 (no short-circuit).

    Violations come sorted by kind, then by their vertex tuple.
    """
    f = check_labeling(f, g.n)
    adj = g.adjacency
    found: list[Violation] = []
    for v in range(g.n):
        if f[v] == -1:
            guards = sum(1 for u in adj[v] if f[u] == 2)
            if guards == 0:
                found.append(Violation(ViolationKind.C1_NO_GUARD, (v,), 0))
            elif guards > 1:
                found.append(Violation(ViolationKind.C1_MULTI_GUARD, (v,), guards))
        elif f[v] == 2:
            weak = [u for u in adj[v] if f[u] == -1]
            for i in range(len(weak)):
                for j in range(i + 1, len(weak)):
                    found.append(Violation(ViolationKind.C2_SHARED_GUARD, (weak[i], weak[j]), v))
        s = f[v] + sum(f[u] for u in adj[v])
        if s < 1:
            found.append(Violation(ViolationKind.C3_NONPOSITIVE_SUM, (v,), s))
    found.sort(key=Violation.sort_key)
    return ValidationReport(tuple(found))


def is_plsrd(g: Graph, f: Sequence[int]) -> bool:
    """Fast boolean form of :func:`validate` for inner loops; no checks on ``f``."""
    adj = g.adjacency
    for v in range(g.n):
        fv = f[v]
        s = fv
        if fv == -1:
            guards = 0
            for u in adj[v]:
                fu = f[u]
                s += fu
                if fu == 2:
                    guards += 1
            if guards != 1:
                return False
        elif fv == 2:
            weak = 0
            for u in adj[v]:
                fu = f[u]
                s += fu
                if fu == -1:
                    weak += 1
            if weak > 1:
                return False
        else:
            for u in adj[v]:
                s += f[u]
        if s < 1:
            return False
    return True
