"""Graph file formats and JSON/text renderings of results."""

from __future__ import annotations

import json
from pathlib import Path

from .graph import WeightedGraph


class GraphFormatError(ValueError):
    pass


def graph_to_json(g: WeightedGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edge_list()]}


def graph_from_json(data) -> WeightedGraph:
    if not isinstance(data, dict) or "n" not in data:
        raise GraphFormatError('graph JSON must be an object with "n" and "edges"')
    n = data["n"]
    if not isinstance(n, int):
        raise GraphFormatError(f'"n" must be an integer, got {n!r}')
    edges = data.get("edges", [])
    triples = []
    for e in edges:
        if not (isinstance(e, list) and len(e) == 3 and all(isinstance(x, int) for x in e)):
            raise GraphFormatError(f"edge entries must be [i, j, w] integer triples, got {e!r}")
        triples.append(tuple(e))
    try:
        return WeightedGraph.from_edges(n, triples)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def graph_from_text(text: str) -> WeightedGraph:
    """Parse ``n <count>`` followed by ``i j w`` lines; ``#`` starts a comment."""
    lines = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or lines[0][0] != "n" or len(lines[0]) != 2:
        raise GraphFormatError('text graph must start with a line "n <count>"')
    try:
        n = int(lines[0][1])
        triples = [tuple(int(x) for x in ln) for ln in lines[1:]]
    except ValueError:
        raise GraphFormatError("non-integer token in text graph") from None
    if any(len(t) != 3 for t in triples):
        raise GraphFormatError('edge lines must have the form "i j w"')
    try:
        return WeightedGraph.from_edges(n, triples)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def graph_to_text(g: WeightedGraph) -> str:
    return "\n".join([f"n {g.n}", *(f"{i} {j} {w}" for i, j, w in g.edge_list())]) + "\n"


def load_graph(path: str | Path) -> WeightedGraph:
    """Read a graph file, JSON if it parses as JSON, otherwise the text format."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphFormatError(f"invalid JSON: {exc}") from None
        return graph_from_json(data)
    return graph_from_text(text)


def cover_to_json(c) -> dict:
    return {str(v): s for v, s in sorted(c.items())}


def cover_to_text(c) -> str:
    return "{" + ", ".join(f"v{v}" if s == 1 else f"v{v}^{s}" for v, s in sorted(c.items())) + "}"
