"""File formats: graphs, labelings and result records.

Graphs are written as canonical JSON, ``{"n":<int>,"edges":[[u,v],...]}``
with ``u < v``, edges sorted and no whitespace, so equal graphs produce
byte-identical files.  The reader also accepts a plain edge list: an
``n m`` header followed by ``m`` lines ``u v``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .exceptions import GraphFormatError
from .graph import Graph
from .labeling import ValidationReport, check_labeling


def dumps_json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def graph_to_json(g: Graph) -> str:
    return dumps_json({"n": g.n, "edges": [[u, v] for u, v in g.edges()]})


def graph_from_json(text: str) -> Graph:
    try:
        data = json.loads(text)
        n = int(data["n"])
        edges = [(int(e[0]), int(e[1])) for e in data["edges"]]
    except (ValueError, KeyError, TypeError, IndexError) as exc:
        raise GraphFormatError(f"bad graph JSON: {exc}") from exc
    return _build(n, edges)


def graph_from_edgelist(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise GraphFormatError("edge list must start with an 'n m' header")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        edges = [(int(a), int(b)) for a, b in lines[1:]]
    except ValueError as exc:
        raise GraphFormatError(f"bad edge list: {exc}") from exc
    if len(edges) != m:
        raise GraphFormatError(f"header promises {m} edges, found {len(edges)}")
    return _build(n, edges)


def _build(n, edges) -> Graph:
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def parse_graph(text: str) -> Graph:
    if text.lstrip().startswith("{"):
        return graph_from_json(text)
    return graph_from_edgelist(text)


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(graph_to_json(g), encoding="utf-8")


def labeling_to_json(labels) -> str:
    return dumps_json({"labels": list(labels)})


def labeling_from_json(text: str) -> tuple[int, ...]:
    try:
        data = json.loads(text)
        raw = data["labels"] if isinstance(data, dict) else data
    except (ValueError, KeyError, TypeError) as exc:
        raise GraphFormatError(f"bad labeling JSON: {exc}") from exc
    return check_labeling(raw)


def read_labeling(path) -> tuple[int, ...]:
    return labeling_from_json(Path(path).read_text(encoding="utf-8"))


def write_labeling(labels, path) -> None:
    Path(path).write_text(labeling_to_json(labels), encoding="utf-8")


def report_to_json(report: ValidationReport) -> str:
    return dumps_json(report.to_list())
